#include "artin/garside_std.hpp"

#include <algorithm>

namespace artin {

StdGarside StdGarside::build(const RootSystem& rs) {
	StdGarside g;
	g.rs = &rs;
	// Longest element: saturate right multiplication by non-descents.
	WeylElement w = WeylElement::identity(rs.rank());
	for (;;) {
		auto dr = descents(rs, w, Side::Right);
		int pick = -1;
		for (int i = 0; i < rs.rank(); ++i)
			if (!dr.count(i)) {
				pick = i;
				break;
			}
		if (pick < 0) break;
		w = w * rs.simples[pick];
	}
	g.w0 = w;
	ensure((g.w0 * g.w0).is_identity(), "longest element must be an involution");
	g.delta_perm.assign(rs.rank(), -1);
	for (int i = 0; i < rs.rank(); ++i) {
		WeylElement c = g.w0 * rs.simples[i] * g.w0;
		int j = -1;
		for (int k = 0; k < rs.rank(); ++k)
			if (c == rs.simples[k]) j = k;
		ensure(j >= 0, "w0 conjugation must permute the simple reflections");
		g.delta_perm[i] = j;
	}
	return g;
}

bool prefix_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
	return coxeter_length(rs, u) + coxeter_length(rs, u.inverse() * w) == coxeter_length(rs, w);
}

bool suffix_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
	return coxeter_length(rs, u) + coxeter_length(rs, w * u.inverse()) == coxeter_length(rs, w);
}

void left_greedy(const RootSystem& rs, std::vector<WeylElement>& factors) {
	std::erase_if(factors, [](const WeylElement& f) { return f.is_identity(); });
	bool changed = true;
	while (changed) {
		changed = false;
		for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
			WeylElement& a = factors[i];
			WeylElement& b = factors[i + 1];
			for (;;) {
				auto dl = descents(rs, b, Side::Left);
				auto dr = descents(rs, a, Side::Right);
				int pick = -1;
				for (int s : dl)
					if (!dr.count(s)) {
						pick = s;
						break;
					}
				if (pick < 0) break;
				a = a * rs.simples[pick];
				b = rs.simples[pick] * b;
				changed = true;
			}
		}
		if (changed)
			std::erase_if(factors, [](const WeylElement& f) { return f.is_identity(); });
	}
}

std::vector<WeylElement> greedy_nf_positive(const RootSystem& rs, const BraidWord& word) {
	require(word.positive(), "greedy normal form needs a positive word");
	std::vector<WeylElement> factors;
	factors.reserve(word.letters.size());
	for (int l : word.letters) factors.push_back(rs.simples[l - 1]);
	left_greedy(rs, factors);
	return factors;
}

namespace {

// Strips one generator s from the left of a left-greedy positive factor list.
void strip_left(const RootSystem& rs, std::vector<WeylElement>& factors, int s) {
	ensure(!factors.empty() && descents(rs, factors.front(), Side::Left).count(s),
	       "generator must left-divide before stripping");
	factors.front() = rs.simples[s] * factors.front();
	left_greedy(rs, factors);
}

}  // namespace

MixedNormalForm mixed_nf(const StdGarside& g, const BraidWord& word) {
	const RootSystem& rs = *g.rs;
	int p = 0;
	std::vector<int> letters;  // 0-based positive word for Delta^{-p} * (product)
	for (int v : word.letters) {
		if (v > 0) {
			letters.push_back(v - 1);
		} else {
			int i = -v - 1;
			// q * s_i^-1 = Delta^-1 * phi(q) * lift(w0 s_i)
			++p;
			for (int& l : letters) l = g.delta_perm[l];
			for (int l : reduced_word(rs, g.w0 * rs.simples[i])) letters.push_back(l);
		}
	}
	std::vector<WeylElement> factors;
	factors.reserve(letters.size());
	for (int l : letters) factors.push_back(rs.simples[l]);
	left_greedy(rs, factors);
	while (p > 0 && !factors.empty() && factors.front() == g.w0) {
		--p;
		factors.erase(factors.begin());
	}
	MixedNormalForm nf;
	if (p == 0) {
		nf.pos = std::move(factors);
		return nf;
	}
	std::vector<WeylElement> xs(p, g.w0);
	std::vector<WeylElement>& ys = factors;
	// Cancel the left gcd of the two positive parts.
	while (!xs.empty() && !ys.empty()) {
		auto da = descents(rs, xs.front(), Side::Left);
		auto db = descents(rs, ys.front(), Side::Left);
		int pick = -1;
		for (int s : da)
			if (db.count(s)) {
				pick = s;
				break;
			}
		if (pick < 0) break;
		strip_left(rs, xs, pick);
		strip_left(rs, ys, pick);
	}
	nf.neg.assign(xs.rbegin(), xs.rend());
	nf.pos = std::move(ys);
	return nf;
}

std::pair<int, int> charney_length_oracle(const StdGarside& g, const BraidWord& word) {
	MixedNormalForm nf = mixed_nf(g, word);
	return {static_cast<int>(nf.pos.size()), static_cast<int>(nf.neg.size())};
}

WeylElement simple_gcd(const RootSystem& rs, const WeylElement& a, const WeylElement& b, Side side) {
	if (side == Side::Right)
		return simple_gcd(rs, a.inverse(), b.inverse(), Side::Left).inverse();
	WeylElement x = a, y = b;
	std::vector<int> g;
	for (;;) {
		auto da = descents(rs, x, Side::Left);
		auto db = descents(rs, y, Side::Left);
		int pick = -1;
		for (int s : da)
			if (db.count(s)) {
				pick = s;
				break;
			}
		if (pick < 0) break;
		g.push_back(pick);
		x = rs.simples[pick] * x;
		y = rs.simples[pick] * y;
	}
	return word_image(rs, g);
}

WeylElement simple_lcm(const RootSystem& rs, const WeylElement& a, const WeylElement& b, Side side) {
	if (side == Side::Right)
		return simple_lcm(rs, a.inverse(), b.inverse(), Side::Left).inverse();
	// x -> x w0 is an antiautomorphism of the prefix order.
	StdGarside g = StdGarside::build(rs);  // only w0 needed; cheap at these ranks
	WeylElement j = simple_gcd(rs, a * g.w0, b * g.w0, Side::Left) * g.w0;
	ensure(prefix_leq(rs, a, j) && prefix_leq(rs, b, j), "join must bound both arguments");
	return j;
}

BraidWord nf_word(const RootSystem& rs, const MixedNormalForm& nf) {
	BraidWord out;
	for (const auto& x : nf.neg) {
		auto w = reduced_word(rs, x);
		for (auto it = w.rbegin(); it != w.rend(); ++it) out.letters.push_back(-(*it + 1));
	}
	for (const auto& y : nf.pos)
		for (int l : reduced_word(rs, y)) out.letters.push_back(l + 1);
	return out;
}

bool braid_equal(const StdGarside& g, const BraidWord& a, const BraidWord& b) {
	return mixed_nf(g, a) == mixed_nf(g, b);
}

}  // namespace artin
