#pragma once

#include "artin/dynkin.hpp"

#include <set>
#include <unordered_map>
#include <vector>

namespace artin {

using RootVec = std::vector<int>;  // coordinates in the simple-root basis

// Element of the Weyl group as an n x n integer matrix in the simple-root
// basis; column j is the image of alpha_j. Composition (a*b)(x) = a(b(x)).
struct WeylElement {
	int n = 0;
	std::vector<int> m;  // row-major

	static WeylElement identity(int n);
	int at(int r, int c) const { return m[r * n + c]; }
	int& at(int r, int c) { return m[r * n + c]; }
	RootVec apply(const RootVec& v) const;
	WeylElement operator*(const WeylElement& o) const;
	WeylElement inverse() const;
	bool is_identity() const;
	bool operator==(const WeylElement& o) const { return n == o.n && m == o.m; }
	bool operator<(const WeylElement& o) const { return m < o.m; }
};

struct WeylHash {
	std::size_t operator()(const WeylElement& w) const {
		std::size_t h = static_cast<std::size_t>(w.n);
		for (int x : w.m) h = hash_combine(h, static_cast<std::size_t>(x) + 0x7f);
		return h;
	}
};

struct Reflection {
	WeylElement element;
	RootVec root;    // the positive root
	int root_index;  // index into RootSystem::positive
};

struct RootSystem {
	DynkinSpec spec;
	std::vector<RootVec> positive;  // sorted lexicographically
	std::vector<WeylElement> simples;
	std::vector<Reflection> reflections;  // by root index

	int rank() const { return spec.rank; }
	// Index of a root: i for positive[i], ~i for -positive[i]; requires a root.
	int index_of(const RootVec& r) const;
	bool is_positive_root(const RootVec& r) const;
	const WeylElement& simple(int i) const { return simples[i]; }

private:
	mutable std::unordered_map<std::string, int> pos_index_;
	friend RootSystem build_root_system(const DynkinSpec&);
};

RootSystem build_root_system(const DynkinSpec& spec);

WeylElement simple_reflection(const DynkinSpec& spec, int i);  // 0-based
WeylElement reflection_of_root(const DynkinSpec& spec, const RootVec& beta);

// Cartan pairing (alpha_i, alpha_j) = 2 delta_ij - [i ~ j]; extended bilinearly.
int cartan_pair(const DynkinSpec& spec, const RootVec& x, const RootVec& y);

int coxeter_length(const RootSystem& rs, const WeylElement& w);  // inversions
int reflection_length(const WeylElement& w);  // rank minus fixed-space dim

enum class Side { Left, Right };
std::set<int> descents(const RootSystem& rs, const WeylElement& w, Side side);

bool is_reflection(const WeylElement& w);

// Deterministic reduced word: repeatedly strip the smallest left descent.
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);

WeylElement word_image(const RootSystem& rs, const std::vector<int>& word0);

// Full group enumeration (BFS); intended for oracles and small-rank helpers.
std::vector<WeylElement> enumerate_group(const RootSystem& rs);

}  // namespace artin
