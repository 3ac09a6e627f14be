#pragma once

#include "artin/garside_std.hpp"

#include <map>
#include <string>
#include <vector>

namespace artin {

// A Coxeter element fixed by an orientation: for each oriented edge i -> j,
// s_j occurs to the left of s_i in c_word.
struct CoxeterChoice {
	DynkinSpec spec;
	Orientation orient;
	std::vector<int> c_word;  // 0-based vertices, each exactly once
	WeylElement c;
	BraidWord gamma_word;  // positive lift of c

	// c_word is the lexicographically smallest valid linear extension.
	static CoxeterChoice build(const DynkinSpec& spec, const Orientation& orient);
};

// beta = lift(neg[0])^-1 * ... * lift(pos[0]) * ... with every entry in the
// interval [1, c]; both lists greedy, junction has trivial gcd.
struct DualNormalForm {
	std::vector<WeylElement> neg;
	std::vector<WeylElement> pos;

	bool operator==(const DualNormalForm& o) const { return neg == o.neg && pos == o.pos; }
	bool operator!=(const DualNormalForm& o) const { return !(*this == o); }
	bool is_identity() const { return neg.empty() && pos.empty(); }
};

// The interval [1, c] under reflection length, its lattice order, and the
// braid lifts of all reflections. Built once, then read-only.
struct DualGarside {
	const RootSystem* rs = nullptr;
	CoxeterChoice choice;
	int h = 0;                          // order of c
	std::vector<WeylElement> interval;  // BFS order from the identity
	std::vector<int> ltm;               // reflection length per interval element
	std::vector<std::vector<char>> leq;  // leq[i][j]: interval[i] divides interval[j]
	std::vector<BraidWord> refl_lift;    // per rs->reflections index

	static DualGarside build(const RootSystem& rs, const CoxeterChoice& choice);

	int index_of(const WeylElement& u) const;  // -1 if outside the interval
	bool in_interval(const WeylElement& u) const { return index_of(u) >= 0; }
	bool divides(const WeylElement& u, const WeylElement& v) const;

	WeylElement nc_meet(const WeylElement& u, const WeylElement& v) const;
	WeylElement nc_join(const WeylElement& u, const WeylElement& v) const;
	std::vector<int> dual_descents(const WeylElement& u) const;  // reflection indices

	// complements: u * comp_r(u) = c and comp_l(u) * u = c
	WeylElement comp_r(const WeylElement& u) const { return u.inverse() * choice.c; }
	WeylElement comp_l(const WeylElement& u) const { return choice.c * u.inverse(); }
	WeylElement psi(const WeylElement& u) const;  // conjugation by c

	// Braid word of the positive lift along the smallest minimal T-word.
	BraidWord lift_word(const WeylElement& u) const;

private:
	std::map<std::vector<int>, int> index_;
};

BraidWord dual_lift_reflection(const DualGarside& dg, const Reflection& t);

DualNormalForm dual_mixed_nf(const DualGarside& dg, const BraidWord& word);

// (#positive factors, #negative factors).
std::pair<int, int> dual_length_oracle(const DualGarside& dg, const BraidWord& word);

BraidWord dual_nf_word(const DualGarside& dg, const DualNormalForm& nf);

}  // namespace artin
