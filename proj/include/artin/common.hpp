#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Invariant violations (d^2 != 0, lattice non-closure, ...) throw; they indicate
// a bug, not bad user input.
struct integrity_error : std::logic_error {
	using std::logic_error::logic_error;
};

// Bad user input (unsupported type string, malformed word, ...).
struct input_error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& msg) {
	if (!ok) throw input_error(msg);
}

inline void ensure(bool ok, const std::string& msg) {
	if (!ok) throw integrity_error(msg);
}

inline std::string rat_str(const Rat& r) {
	std::string s = numerator(r).str();
	if (denominator(r) != 1) s += "/" + denominator(r).str();
	return s;
}

Rat parse_rat(const std::string& s);

inline std::size_t hash_combine(std::size_t h, std::size_t v) {
	return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace artin
