#include "artin/garside_dual.hpp"

#include <algorithm>

namespace artin {

CoxeterChoice CoxeterChoice::build(const DynkinSpec& spec, const Orientation& orient) {
	require(orient.directed.size() == spec.edges.size(), "orientation must cover every edge");
	CoxeterChoice ch;
	ch.spec = spec;
	ch.orient = orient;
	// Greedy smallest-vertex topological sort; oriented edge i -> j forces j
	// to the left of i.
	std::vector<char> placed(spec.rank, 0);
	for (int step = 0; step < spec.rank; ++step) {
		int pick = -1;
		for (int v = 0; v < spec.rank && pick < 0; ++v) {
			if (placed[v]) continue;
			bool ready = true;
			for (auto [i, j] : orient.directed)
				if (i == v && !placed[j]) ready = false;
			if (ready) pick = v;
		}
		require(pick >= 0, "orientation admits no linear extension");
		placed[pick] = 1;
		ch.c_word.push_back(pick);
	}
	const RootSystem rs = build_root_system(spec);
	ch.c = word_image(rs, ch.c_word);
	for (int v : ch.c_word) ch.gamma_word.letters.push_back(v + 1);
	return ch;
}

DualGarside DualGarside::build(const RootSystem& rs, const CoxeterChoice& choice) {
	DualGarside dg;
	dg.rs = &rs;
	dg.choice = choice;
	const int n = rs.rank();

	WeylElement acc = choice.c;
	dg.h = 1;
	while (!acc.is_identity()) {
		acc = acc * choice.c;
		++dg.h;
	}

	// Interval BFS: right-multiply by reflections, keeping elements with
	// reflection lengths adding up to n against c.
	dg.interval.push_back(WeylElement::identity(n));
	dg.ltm.push_back(0);
	dg.index_[dg.interval[0].m] = 0;
	std::vector<int> frontier{0};
	int depth = 0;
	while (!frontier.empty()) {
		std::vector<int> next;
		for (int ui : frontier)
			for (const auto& t : rs.reflections) {
				WeylElement v = dg.interval[ui] * t.element;
				if (dg.index_.count(v.m)) continue;
				if (reflection_length(v) != depth + 1) continue;
				if (reflection_length(v.inverse() * choice.c) != n - depth - 1) continue;
				int idx = static_cast<int>(dg.interval.size());
				dg.interval.push_back(v);
				dg.ltm.push_back(depth + 1);
				dg.index_[v.m] = idx;
				next.push_back(idx);
			}
		frontier = std::move(next);
		++depth;
	}
	ensure(dg.index_.count(choice.c.m), "interval must contain c");

	const int m = static_cast<int>(dg.interval.size());
	dg.leq.assign(m, std::vector<char>(m, 0));
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
			dg.leq[i][j] =
			    dg.ltm[i] + reflection_length(dg.interval[i].inverse() * dg.interval[j]) ==
			    dg.ltm[j];

	// Reflection lifts: gamma^k (prefix of c) sigma (prefix)^-1 gamma^-k,
	// first (k, j) in lexicographic order wins.
	dg.refl_lift.assign(rs.reflections.size(), BraidWord{});
	std::vector<char> found(rs.reflections.size(), 0);
	std::size_t covered = 0;
	for (int k = 0; k < dg.h && covered < rs.reflections.size(); ++k) {
		WeylElement ck = WeylElement::identity(n);
		for (int r = 0; r < k; ++r) ck = ck * choice.c;
		for (int j = 0; j < n && covered < rs.reflections.size(); ++j) {
			WeylElement pre = WeylElement::identity(n);
			for (int r = 0; r < j; ++r) pre = pre * rs.simples[choice.c_word[r]];
			WeylElement img = ck * pre * rs.simples[choice.c_word[j]] * pre.inverse() *
			                  ck.inverse();
			ensure(is_reflection(img), "conjugates of simples must be reflections");
			int ri = -1;
			for (std::size_t r = 0; r < rs.reflections.size(); ++r)
				if (rs.reflections[r].element == img) ri = static_cast<int>(r);
			ensure(ri >= 0, "reflection image not found");
			if (found[ri]) continue;
			found[ri] = 1;
			++covered;
			BraidWord w;
			for (int r = 0; r < k; ++r)
				for (int v : choice.c_word) w.letters.push_back(v + 1);
			for (int r = 0; r < j; ++r) w.letters.push_back(choice.c_word[r] + 1);
			w.letters.push_back(choice.c_word[j] + 1);
			for (int r = j - 1; r >= 0; --r) w.letters.push_back(-(choice.c_word[r] + 1));
			for (int r = 0; r < k; ++r)
				for (auto it = choice.c_word.rbegin(); it != choice.c_word.rend(); ++it)
					w.letters.push_back(-(*it + 1));
			dg.refl_lift[ri] = std::move(w);
		}
	}
	ensure(covered == rs.reflections.size(),
	       "k < h must reach every reflection via prefix conjugates");
	for (const auto& t : rs.reflections)
		ensure(dg.in_interval(t.element), "every reflection lies in the interval");
	return dg;
}

int DualGarside::index_of(const WeylElement& u) const {
	auto it = index_.find(u.m);
	return it == index_.end() ? -1 : it->second;
}

bool DualGarside::divides(const WeylElement& u, const WeylElement& v) const {
	int i = index_of(u), j = index_of(v);
	require(i >= 0 && j >= 0, "divisibility is only defined inside the interval");
	return leq[i][j];
}

WeylElement DualGarside::nc_meet(const WeylElement& u, const WeylElement& v) const {
	int i = index_of(u), j = index_of(v);
	require(i >= 0 && j >= 0, "meet needs interval elements");
	int best = 0;
	int count = 0;
	for (int w = 0; w < static_cast<int>(interval.size()); ++w)
		if (leq[w][i] && leq[w][j]) {
			if (ltm[w] > ltm[best]) best = w;
		}
	for (int w = 0; w < static_cast<int>(interval.size()); ++w)
		if (leq[w][i] && leq[w][j] && ltm[w] == ltm[best]) ++count;
	ensure(count == 1, "meet must be unique");
	for (int w = 0; w < static_cast<int>(interval.size()); ++w)
		if (leq[w][i] && leq[w][j]) ensure(leq[w][best], "meet must dominate lower bounds");
	return interval[best];
}

WeylElement DualGarside::nc_join(const WeylElement& u, const WeylElement& v) const {
	int i = index_of(u), j = index_of(v);
	require(i >= 0 && j >= 0, "join needs interval elements");
	int best = index_of(choice.c);
	int count = 0;
	for (int w = 0; w < static_cast<int>(interval.size()); ++w)
		if (leq[i][w] && leq[j][w]) {
			if (ltm[w] < ltm[best]) best = w;
		}
	for (int w = 0; w < static_cast<int>(interval.size()); ++w)
		if (leq[i][w] && leq[j][w] && ltm[w] == ltm[best]) ++count;
	ensure(count == 1, "join must be unique");
	for (int w = 0; w < static_cast<int>(interval.size()); ++w)
		if (leq[i][w] && leq[j][w]) ensure(leq[best][w], "join must bound upper bounds");
	return interval[best];
}

std::vector<int> DualGarside::dual_descents(const WeylElement& u) const {
	int j = index_of(u);
	require(j >= 0, "descents need an interval element");
	std::vector<int> out;
	for (std::size_t r = 0; r < rs->reflections.size(); ++r)
		if (leq[index_of(rs->reflections[r].element)][j]) out.push_back(static_cast<int>(r));
	return out;
}

WeylElement DualGarside::psi(const WeylElement& u) const {
	return choice.c * u * choice.c.inverse();
}

BraidWord DualGarside::lift_word(const WeylElement& u) const {
	require(in_interval(u), "lift needs an interval element");
	BraidWord out;
	WeylElement w = u;
	while (!w.is_identity()) {
		int pick = -1;
		for (std::size_t r = 0; r < rs->reflections.size() && pick < 0; ++r)
			if (divides(rs->reflections[r].element, w)) pick = static_cast<int>(r);
		ensure(pick >= 0, "interval element without a dividing reflection");
		out = out + refl_lift[pick];
		w = rs->reflections[pick].element * w;
		ensure(in_interval(w), "left quotient must stay in the interval");
	}
	return out;
}

BraidWord dual_lift_reflection(const DualGarside& dg, const Reflection& t) {
	for (std::size_t r = 0; r < dg.rs->reflections.size(); ++r)
		if (dg.rs->reflections[r].element == t.element) return dg.refl_lift[r];
	throw input_error("not a reflection of this root system");
}

namespace {

// Left-greedy normalization of a list of interval elements: slide divisors of
// each factor into its left neighbour while the product stays simple.
void dual_greedy(const DualGarside& dg, std::vector<WeylElement>& factors) {
	std::erase_if(factors, [](const WeylElement& f) { return f.is_identity(); });
	const auto& refl = dg.rs->reflections;
	bool changed = true;
	while (changed) {
		changed = false;
		for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
			WeylElement& a = factors[i];
			WeylElement& b = factors[i + 1];
			for (;;) {
				int pick = -1;
				for (std::size_t r = 0; r < refl.size() && pick < 0; ++r) {
					const WeylElement& t = refl[r].element;
					if (!dg.divides(t, b)) continue;
					if (dg.divides(t, a)) continue;  // product would drop
					if (!dg.in_interval(a * t)) continue;
					pick = static_cast<int>(r);
				}
				if (pick < 0) break;
				a = a * refl[pick].element;
				b = refl[pick].element * b;
				changed = true;
			}
		}
		if (changed)
			std::erase_if(factors, [](const WeylElement& f) { return f.is_identity(); });
	}
}

void dual_strip_left(const DualGarside& dg, std::vector<WeylElement>& factors, int r) {
	const WeylElement& t = dg.rs->reflections[r].element;
	ensure(!factors.empty() && dg.divides(t, factors.front()),
	       "reflection must divide before stripping");
	factors.front() = t * factors.front();
	dual_greedy(dg, factors);
}

}  // namespace

DualNormalForm dual_mixed_nf(const DualGarside& dg, const BraidWord& word) {
	const RootSystem& rs = *dg.rs;
	int k = 0;
	std::vector<WeylElement> D;
	for (int v : word.letters) {
		if (v > 0) {
			D.push_back(rs.simples[v - 1]);
		} else {
			int i = -v - 1;
			// sigma_i^-1 = gamma^-1 * lift(c s_i)
			++k;
			for (auto& d : D) d = dg.psi(d);
			D.push_back(dg.choice.c * rs.simples[i]);
		}
		dual_greedy(dg, D);
	}
	dual_greedy(dg, D);
	while (k > 0 && !D.empty() && D.front() == dg.choice.c) {
		--k;
		D.erase(D.begin());
	}
	DualNormalForm nf;
	if (k == 0) {
		nf.pos = std::move(D);
		return nf;
	}
	std::vector<WeylElement> xs(k, dg.choice.c);
	std::vector<WeylElement>& ys = D;
	while (!xs.empty() && !ys.empty()) {
		int pick = -1;
		for (std::size_t r = 0; r < rs.reflections.size() && pick < 0; ++r) {
			const WeylElement& t = rs.reflections[r].element;
			if (dg.divides(t, xs.front()) && dg.divides(t, ys.front()))
				pick = static_cast<int>(r);
		}
		if (pick < 0) break;
		dual_strip_left(dg, xs, pick);
		dual_strip_left(dg, ys, pick);
	}
	nf.neg.assign(xs.rbegin(), xs.rend());
	nf.pos = std::move(ys);
	return nf;
}

std::pair<int, int> dual_length_oracle(const DualGarside& dg, const BraidWord& word) {
	DualNormalForm nf = dual_mixed_nf(dg, word);
	return {static_cast<int>(nf.pos.size()), static_cast<int>(nf.neg.size())};
}

BraidWord dual_nf_word(const DualGarside& dg, const DualNormalForm& nf) {
	BraidWord out;
	for (const auto& x : nf.neg) out = out + dg.lift_word(x).inverse();
	for (const auto& y : nf.pos) out = out + dg.lift_word(y);
	return out;
}

}  // namespace artin
