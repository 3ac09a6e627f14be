#include "artin/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace artin {

Rat parse_rat(const std::string& s) {
	auto slash = s.find('/');
	try {
		if (slash == std::string::npos) return Rat(Int(s));
		return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
	} catch (const std::exception&) {
		throw input_error("bad rational: '" + s + "'");
	}
}

DynkinSpec DynkinSpec::parse(const std::string& name) {
	std::string t;
	for (char c : name)
		if (!std::isspace(static_cast<unsigned char>(c))) t += c;
	require(t.size() >= 2, "type must look like A3, D5, E6; got '" + name + "'");
	char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
	int rank = 0;
	try {
		std::size_t used = 0;
		rank = std::stoi(t.substr(1), &used);
		require(used + 1 == t.size(), "trailing junk in type '" + name + "'");
	} catch (const std::exception&) {
		throw input_error("bad rank in type '" + name + "'");
	}
	DynkinSpec d;
	d.family = fam;
	d.rank = rank;
	switch (fam) {
		case 'A':
			require(rank >= 1, "A_n needs n >= 1");
			for (int i = 0; i + 1 < rank; ++i) d.edges.emplace_back(i, i + 1);
			break;
		case 'D':
			require(rank >= 4, "D_n needs n >= 4");
			// Chain 1..n-2 with both n-1 and n attached at n-2.
			for (int i = 0; i + 1 < rank - 1; ++i) d.edges.emplace_back(i, i + 1);
			d.edges.emplace_back(rank - 3, rank - 1);
			break;
		case 'E':
			require(rank >= 6 && rank <= 8, "E_n needs n in {6,7,8}");
			// Chain 1-3-4-5-..-n with 2 attached at 4 (Bourbaki).
			d.edges.emplace_back(0, 2);
			for (int i = 2; i + 1 < rank; ++i) d.edges.emplace_back(i, i + 1);
			d.edges.emplace_back(1, 3);
			break;
		default:
			throw input_error("unsupported type '" + name + "' (only simply laced A/D/E)");
	}
	for (auto& e : d.edges)
		if (e.first > e.second) std::swap(e.first, e.second);
	std::sort(d.edges.begin(), d.edges.end());
	return d;
}

std::string DynkinSpec::name() const {
	std::ostringstream os;
	os << family << rank;
	return os.str();
}

void DynkinSpec::build_adj() const {
	adj_.assign(rank, {});
	for (auto [i, j] : edges) {
		adj_[i].push_back(j);
		adj_[j].push_back(i);
	}
	for (auto& v : adj_) std::sort(v.begin(), v.end());
}

bool DynkinSpec::adjacent(int i, int j) const {
	if (adj_.empty()) build_adj();
	const auto& v = adj_[i];
	return std::binary_search(v.begin(), v.end(), j);
}

const std::vector<int>& DynkinSpec::neighbours(int i) const {
	if (adj_.empty()) build_adj();
	return adj_[i];
}

Orientation Orientation::default_for(const DynkinSpec& spec) {
	Orientation o;
	o.directed = spec.edges;  // edges are stored (i, j) with i < j
	return o;
}

Orientation Orientation::parse(const DynkinSpec& spec, const std::string& text) {
	std::string t;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c))) t += c;
	if (t.empty()) return default_for(spec);
	Orientation o;
	std::set<std::pair<int, int>> covered;
	std::stringstream ss(t);
	std::string item;
	while (std::getline(ss, item, ',')) {
		auto gt = item.find('>');
		require(gt != std::string::npos, "orientation item '" + item + "' is not of the form i>j");
		int i = 0, j = 0;
		try {
			std::size_t ui = 0, uj = 0;
			i = std::stoi(item.substr(0, gt), &ui);
			j = std::stoi(item.substr(gt + 1), &uj);
			require(ui == gt && uj + gt + 1 == item.size(),
			        "orientation item '" + item + "' is not of the form i>j");
		} catch (const input_error&) {
			throw;
		} catch (const std::exception&) {
			throw input_error("orientation item '" + item + "' is not of the form i>j");
		}
		require(i >= 1 && i <= spec.rank && j >= 1 && j <= spec.rank,
		        "orientation vertex out of range in '" + item + "'");
		--i;
		--j;
		require(spec.adjacent(i, j), "no edge between " + std::to_string(i + 1) + " and " +
		                                 std::to_string(j + 1));
		auto key = std::minmax(i, j);
		require(covered.insert({key.first, key.second}).second,
		        "edge oriented twice in '" + text + "'");
		o.directed.emplace_back(i, j);
	}
	require(covered.size() == spec.edges.size(), "orientation must cover every edge");
	std::sort(o.directed.begin(), o.directed.end());
	return o;
}

bool Orientation::has(int i, int j) const {
	return std::find(directed.begin(), directed.end(), std::make_pair(i, j)) != directed.end();
}

std::string Orientation::format() const {
	std::string out;
	for (auto [i, j] : directed) {
		if (!out.empty()) out += ',';
		out += std::to_string(i + 1) + ">" + std::to_string(j + 1);
	}
	return out;
}

}  // namespace artin
