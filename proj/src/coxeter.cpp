#include "artin/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace artin {

WeylElement WeylElement::identity(int n) {
	WeylElement w;
	w.n = n;
	w.m.assign(n * n, 0);
	for (int i = 0; i < n; ++i) w.at(i, i) = 1;
	return w;
}

RootVec WeylElement::apply(const RootVec& v) const {
	RootVec out(n, 0);
	for (int c = 0; c < n; ++c) {
		if (v[c] == 0) continue;
		for (int r = 0; r < n; ++r) out[r] += at(r, c) * v[c];
	}
	return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
	WeylElement out;
	out.n = n;
	out.m.assign(n * n, 0);
	for (int r = 0; r < n; ++r)
		for (int k = 0; k < n; ++k) {
			int a = at(r, k);
			if (a == 0) continue;
			for (int c = 0; c < n; ++c) out.at(r, c) += a * o.at(k, c);
		}
	return out;
}

WeylElement WeylElement::inverse() const {
	// Orthogonal w.r.t. the Cartan form but not as a matrix; invert by solving.
	// Entries stay integral; use exact elimination over Rat.
	int nn = n;
	std::vector<Rat> a(nn * 2 * nn, Rat(0));
	auto A = [&](int r, int c) -> Rat& { return a[r * 2 * nn + c]; };
	for (int r = 0; r < nn; ++r) {
		for (int c = 0; c < nn; ++c) A(r, c) = at(r, c);
		A(r, nn + r) = 1;
	}
	for (int col = 0, row = 0; col < nn && row < nn; ++col) {
		int p = -1;
		for (int r = row; r < nn; ++r)
			if (A(r, col) != 0) { p = r; break; }
		ensure(p >= 0, "weyl matrix not invertible");
		for (int c = 0; c < 2 * nn; ++c) std::swap(A(p, c), A(row, c));
		Rat piv = A(row, col);
		for (int c = 0; c < 2 * nn; ++c) A(row, c) /= piv;
		for (int r = 0; r < nn; ++r) {
			if (r == row || A(r, col) == 0) continue;
			Rat f = A(r, col);
			for (int c = 0; c < 2 * nn; ++c) A(r, c) -= f * A(row, c);
		}
		++row;
	}
	WeylElement out;
	out.n = nn;
	out.m.assign(nn * nn, 0);
	for (int r = 0; r < nn; ++r)
		for (int c = 0; c < nn; ++c) {
			Rat v = A(r, nn + c);
			ensure(denominator(v) == 1, "weyl inverse not integral");
			out.at(r, c) = static_cast<int>(numerator(v));
		}
	return out;
}

bool WeylElement::is_identity() const {
	for (int r = 0; r < n; ++r)
		for (int c = 0; c < n; ++c)
			if (at(r, c) != (r == c ? 1 : 0)) return false;
	return true;
}

WeylElement simple_reflection(const DynkinSpec& spec, int i) {
	int n = spec.rank;
	WeylElement w = WeylElement::identity(n);
	// s_i(alpha_j) = alpha_j - a_ij alpha_i
	for (int j = 0; j < n; ++j) {
		int aij = (i == j) ? 2 : (spec.adjacent(i, j) ? -1 : 0);
		w.at(i, j) -= aij;
	}
	return w;
}

int cartan_pair(const DynkinSpec& spec, const RootVec& x, const RootVec& y) {
	int n = spec.rank;
	int s = 0;
	for (int i = 0; i < n; ++i) {
		if (x[i] == 0) continue;
		s += 2 * x[i] * y[i];
		for (int j : spec.neighbours(i)) s -= x[i] * y[j];
	}
	return s;
}

WeylElement reflection_of_root(const DynkinSpec& spec, const RootVec& beta) {
	int n = spec.rank;
	WeylElement w = WeylElement::identity(n);
	for (int j = 0; j < n; ++j) {
		RootVec ej(n, 0);
		ej[j] = 1;
		int p = cartan_pair(spec, ej, beta);
		for (int r = 0; r < n; ++r) w.at(r, j) -= p * beta[r];
	}
	return w;
}

static std::string key_of(const RootVec& r) {
	std::string k;
	for (int x : r) {
		k += std::to_string(x);
		k += ',';
	}
	return k;
}

RootSystem build_root_system(const DynkinSpec& spec) {
	RootSystem rs;
	rs.spec = spec;
	int n = spec.rank;
	for (int i = 0; i < n; ++i) rs.simples.push_back(simple_reflection(spec, i));

	std::set<RootVec> all;
	std::deque<RootVec> work;
	for (int i = 0; i < n; ++i) {
		RootVec e(n, 0);
		e[i] = 1;
		all.insert(e);
		work.push_back(e);
	}
	while (!work.empty()) {
		RootVec r = work.front();
		work.pop_front();
		for (int i = 0; i < n; ++i) {
			RootVec img = rs.simples[i].apply(r);
			if (all.insert(img).second) work.push_back(img);
		}
	}
	for (const auto& r : all) {
		bool pos = false;
		for (int x : r)
			if (x != 0) { pos = x > 0; break; }
		if (pos) rs.positive.push_back(r);
	}
	std::sort(rs.positive.begin(), rs.positive.end());
	for (int i = 0; i < static_cast<int>(rs.positive.size()); ++i) {
		rs.pos_index_[key_of(rs.positive[i])] = i;
		Reflection t;
		t.root = rs.positive[i];
		t.root_index = i;
		t.element = reflection_of_root(spec, t.root);
		rs.reflections.push_back(std::move(t));
	}
	return rs;
}

bool RootSystem::is_positive_root(const RootVec& r) const {
	return pos_index_.count(key_of(r)) > 0;
}

int RootSystem::index_of(const RootVec& r) const {
	auto it = pos_index_.find(key_of(r));
	if (it != pos_index_.end()) return it->second;
	RootVec neg(r.size());
	for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
	it = pos_index_.find(key_of(neg));
	ensure(it != pos_index_.end(), "not a root");
	return ~it->second;
}

int coxeter_length(const RootSystem& rs, const WeylElement& w) {
	int count = 0;
	for (const auto& beta : rs.positive) {
		RootVec img = w.apply(beta);
		bool neg = false;
		for (int x : img)
			if (x != 0) { neg = x < 0; break; }
		if (neg) ++count;
	}
	return count;
}

int reflection_length(const WeylElement& w) {
	// rank of (w - 1) over the rationals
	int n = w.n;
	std::vector<Rat> a(n * n);
	for (int r = 0; r < n; ++r)
		for (int c = 0; c < n; ++c) a[r * n + c] = w.at(r, c) - (r == c ? 1 : 0);
	int rank = 0;
	for (int col = 0, row = 0; col < n && row < n; ++col) {
		int p = -1;
		for (int r = row; r < n; ++r)
			if (a[r * n + col] != 0) { p = r; break; }
		if (p < 0) continue;
		for (int c = 0; c < n; ++c) std::swap(a[p * n + c], a[row * n + c]);
		for (int r = row + 1; r < n; ++r) {
			if (a[r * n + col] == 0) continue;
			Rat f = a[r * n + col] / a[row * n + col];
			for (int c = col; c < n; ++c) a[r * n + c] -= f * a[row * n + c];
		}
		++row;
		++rank;
	}
	return rank;
}

std::set<int> descents(const RootSystem& rs, const WeylElement& w, Side side) {
	(void)rs;
	const WeylElement wi = (side == Side::Left) ? w.inverse() : w;
	// Right descents: w(alpha_i) negative. Left descents: w^{-1}(alpha_i) negative.
	std::set<int> out;
	int n = w.n;
	for (int i = 0; i < n; ++i) {
		bool neg = false;
		for (int r = 0; r < n; ++r) {
			int x = wi.at(r, i);
			if (x != 0) { neg = x < 0; break; }
		}
		if (neg) out.insert(i);
	}
	return out;
}

bool is_reflection(const WeylElement& w) { return reflection_length(w) == 1; }

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
	std::vector<int> out;
	WeylElement cur = w;
	while (!cur.is_identity()) {
		auto d = descents(rs, cur, Side::Left);
		ensure(!d.empty(), "non-identity element without left descent");
		int i = *d.begin();
		out.push_back(i);
		cur = rs.simples[i] * cur;  // strips s_i from the left
	}
	return out;
}

WeylElement word_image(const RootSystem& rs, const std::vector<int>& word0) {
	WeylElement w = WeylElement::identity(rs.rank());
	for (int i : word0) w = w * rs.simples[i];
	return w;
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs) {
	std::vector<WeylElement> out;
	std::unordered_set<std::size_t> seen_h;
	std::set<WeylElement> seen;
	std::deque<WeylElement> work;
	WeylElement id = WeylElement::identity(rs.rank());
	seen.insert(id);
	work.push_back(id);
	while (!work.empty()) {
		WeylElement w = work.front();
		work.pop_front();
		out.push_back(w);
		for (int i = 0; i < rs.rank(); ++i) {
			WeylElement nw = w * rs.simples[i];
			if (seen.insert(nw).second) work.push_back(nw);
		}
	}
	(void)seen_h;
	return out;
}

}  // namespace artin
