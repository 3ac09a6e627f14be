#pragma once

#include "artin/braid.hpp"
#include "artin/coxeter.hpp"

#include <utility>
#include <vector>

namespace artin {

// Classical Garside structure on the positive braid monoid. Simple elements
// are positive lifts of Weyl elements and are represented by their image.
struct StdGarside {
	const RootSystem* rs = nullptr;
	WeylElement w0;
	std::vector<int> delta_perm;  // w0 s_i w0 = s_{delta_perm[i]}

	static StdGarside build(const RootSystem& rs);
	int rank() const { return rs->rank(); }
	WeylElement phi(const WeylElement& w) const { return w0 * w * w0; }
};

// beta = neg[0]^-1 * neg[1]^-1 * ... * pos[0] * pos[1] * ... with each entry
// the Weyl image of a simple factor. neg is empty or ends with the factor at
// the junction; D_L(neg.back()) and D_L(pos.front()) are disjoint.
struct MixedNormalForm {
	std::vector<WeylElement> neg;
	std::vector<WeylElement> pos;

	bool operator==(const MixedNormalForm& o) const { return neg == o.neg && pos == o.pos; }
	bool operator!=(const MixedNormalForm& o) const { return !(*this == o); }
	bool is_identity() const { return neg.empty() && pos.empty(); }
};

// u is a prefix of w (w = u * c with lengths adding).
bool prefix_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w);
bool suffix_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w);

// Normalizes a factor list in place to left-greedy form, dropping identities.
void left_greedy(const RootSystem& rs, std::vector<WeylElement>& factors);

std::vector<WeylElement> greedy_nf_positive(const RootSystem& rs, const BraidWord& word);

MixedNormalForm mixed_nf(const StdGarside& g, const BraidWord& word);

// (#positive factors, #negative factors).
std::pair<int, int> charney_length_oracle(const StdGarside& g, const BraidWord& word);

// Meet/join of the divisibility lattice on simples, computed in W.
WeylElement simple_gcd(const RootSystem& rs, const WeylElement& a, const WeylElement& b, Side side);
WeylElement simple_lcm(const RootSystem& rs, const WeylElement& a, const WeylElement& b, Side side);

// Braid word spelling out the normal form (for round trips and display).
BraidWord nf_word(const RootSystem& rs, const MixedNormalForm& nf);

bool braid_equal(const StdGarside& g, const BraidWord& a, const BraidWord& b);

}  // namespace artin
