#include "artin/braid.hpp"

#include <sstream>

namespace artin {

BraidWord BraidWord::parse(const std::string& text, int rank) {
	BraidWord w;
	std::istringstream is(text);
	std::string tok;
	while (is >> tok) {
		int v = 0;
		try {
			std::size_t used = 0;
			v = std::stoi(tok, &used);
			require(used == tok.size(), "bad letter '" + tok + "'");
		} catch (const std::exception&) {
			throw input_error("bad letter '" + tok + "' in braid word");
		}
		require(v != 0, "braid letters are nonzero signed indices");
		require(std::abs(v) <= rank, "letter " + tok + " out of range for rank " +
		                                 std::to_string(rank));
		w.letters.push_back(v);
	}
	return w;
}

std::string BraidWord::format() const {
	std::ostringstream os;
	for (std::size_t i = 0; i < letters.size(); ++i) {
		if (i) os << ' ';
		os << letters[i];
	}
	return os.str();
}

BraidWord BraidWord::inverse() const {
	BraidWord w;
	for (auto it = letters.rbegin(); it != letters.rend(); ++it)
		w.letters.push_back(-*it);
	return w;
}

BraidWord BraidWord::operator+(const BraidWord& o) const {
	BraidWord w = *this;
	w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
	return w;
}

BraidWord BraidWord::pow(int k) const {
	BraidWord base = k >= 0 ? *this : inverse();
	BraidWord out;
	for (int i = 0; i < std::abs(k); ++i) out = out + base;
	return out;
}

bool BraidWord::positive() const {
	for (int l : letters)
		if (l < 0) return false;
	return true;
}

bool BraidWord::negative() const {
	for (int l : letters)
		if (l > 0) return false;
	return true;
}

WeylElement braid_image(const RootSystem& rs, const BraidWord& w) {
	WeylElement out = WeylElement::identity(rs.rank());
	for (int l : w.letters) out = out * rs.simples[std::abs(l) - 1];
	return out;
}

}  // namespace artin
