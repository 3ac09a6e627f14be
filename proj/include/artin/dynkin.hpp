#pragma once

#include "artin/common.hpp"

#include <utility>
#include <vector>

namespace artin {

// Simply laced Dynkin diagram, Bourbaki vertex numbering, vertices 0-based
// internally and 1-based in all user-facing text.
struct DynkinSpec {
	char family = 'A';  // 'A', 'D' or 'E'
	int rank = 0;
	std::vector<std::pair<int, int>> edges;  // i < j, 0-based

	static DynkinSpec parse(const std::string& name);
	std::string name() const;
	bool adjacent(int i, int j) const;
	const std::vector<int>& neighbours(int i) const;

private:
	mutable std::vector<std::vector<int>> adj_;
	void build_adj() const;
};

// One direction per Dynkin edge. Text format "i>j,k>l" with 1-based vertices;
// the default directs each edge from the smaller Bourbaki index to the larger.
struct Orientation {
	std::vector<std::pair<int, int>> directed;  // (i, j) means edge i -> j, 0-based

	static Orientation parse(const DynkinSpec& spec, const std::string& text);
	static Orientation default_for(const DynkinSpec& spec);
	bool has(int i, int j) const;  // true iff the edge is oriented i -> j
	std::string format() const;
};

}  // namespace artin
