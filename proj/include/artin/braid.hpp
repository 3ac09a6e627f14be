#pragma once

#include "artin/coxeter.hpp"

#include <string>
#include <vector>

namespace artin {

// Word in the Artin generators; letters are signed 1-based indices, so
// "1 -3 2" means sigma_1 sigma_3^{-1} sigma_2. The leftmost letter acts last
// on complexes (rightmost acts first).
struct BraidWord {
	std::vector<int> letters;

	static BraidWord parse(const std::string& text, int rank);
	std::string format() const;
	BraidWord inverse() const;
	BraidWord operator+(const BraidWord& o) const;  // concatenation
	BraidWord pow(int k) const;  // k may be negative
	bool positive() const;
	bool negative() const;
};

WeylElement braid_image(const RootSystem& rs, const BraidWord& w);

}  // namespace artin
