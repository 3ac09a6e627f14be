#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artin/garside_dual.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <set>

using namespace artin;

namespace {

struct Ctx {
	DynkinSpec spec;
	std::shared_ptr<RootSystem> rs_ptr;
	CoxeterChoice ch;
	DualGarside dg;
	StdGarside sg;
	const RootSystem& rs;
};

Ctx make(const std::string& type, const std::string& orient = "") {
	auto spec = DynkinSpec::parse(type);
	auto rs = std::make_shared<RootSystem>(build_root_system(spec));
	auto ch = CoxeterChoice::build(spec, Orientation::parse(spec, orient));
	auto dg = DualGarside::build(*rs, ch);
	auto sg = StdGarside::build(*rs);
	return {spec, rs, std::move(ch), std::move(dg), std::move(sg), *rs};
}

BraidWord random_word(std::mt19937_64& rng, int rank, int len) {
	BraidWord w;
	std::uniform_int_distribution<int> gen(1, rank);
	std::uniform_int_distribution<int> sign(0, 1);
	for (int i = 0; i < len; ++i) w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
	return w;
}

BraidWord random_rewrite(std::mt19937_64& rng, const DynkinSpec& spec, const BraidWord& w) {
	const auto& L = w.letters;
	std::vector<BraidWord> moves;
	for (std::size_t i = 0; i + 1 < L.size(); ++i) {
		int a = L[i], b = L[i + 1];
		if (std::abs(a) != std::abs(b) && !spec.adjacent(std::abs(a) - 1, std::abs(b) - 1)) {
			auto nw = w;
			std::swap(nw.letters[i], nw.letters[i + 1]);
			moves.push_back(nw);
		}
		if (a + b == 0) {
			auto nw = w;
			nw.letters.erase(nw.letters.begin() + i, nw.letters.begin() + i + 2);
			moves.push_back(nw);
		}
		if (i + 2 < L.size() && L[i + 2] == a && a != b && (a > 0) == (b > 0) &&
		    spec.adjacent(std::abs(a) - 1, std::abs(b) - 1)) {
			auto nw = w;
			nw.letters[i] = b;
			nw.letters[i + 1] = a;
			nw.letters[i + 2] = b;
			moves.push_back(nw);
		}
	}
	for (std::size_t i = 0; i <= L.size(); ++i)
		for (int g = 1; g <= spec.rank; ++g) {
			auto nw = w;
			nw.letters.insert(nw.letters.begin() + i, {g, -g});
			moves.push_back(nw);
		}
	return moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
}

// No reflection of the right factor can be absorbed into the left one.
void check_dual_greedy(const Ctx& c, const DualNormalForm& nf) {
	auto pair_greedy = [&](const WeylElement& a, const WeylElement& b) {
		for (const auto& t : c.rs.reflections) {
			if (!c.dg.divides(t.element, b)) continue;
			if (c.dg.divides(t.element, a)) continue;
			CHECK_FALSE(c.dg.in_interval(a * t.element));
		}
	};
	for (std::size_t i = 0; i + 1 < nf.pos.size(); ++i) pair_greedy(nf.pos[i], nf.pos[i + 1]);
	std::vector<WeylElement> x(nf.neg.rbegin(), nf.neg.rend());
	for (std::size_t i = 0; i + 1 < x.size(); ++i) pair_greedy(x[i], x[i + 1]);
	if (!nf.neg.empty() && !nf.pos.empty())
		for (const auto& t : c.rs.reflections) {
			bool shared = c.dg.divides(t.element, nf.neg.back()) &&
			              c.dg.divides(t.element, nf.pos.front());
			CHECK_FALSE(shared);
		}
	for (const auto& f : nf.neg) CHECK(c.dg.in_interval(f));
	for (const auto& f : nf.pos) CHECK(c.dg.in_interval(f));
}

void all_extensions(const Orientation& o, int rank, std::vector<int>& cur, std::vector<char>& used,
                    std::vector<std::vector<int>>& out) {
	if (static_cast<int>(cur.size()) == rank) {
		out.push_back(cur);
		return;
	}
	for (int v = 0; v < rank; ++v) {
		if (used[v]) continue;
		bool ready = true;
		for (auto [i, j] : o.directed)
			if (i == v && !used[j]) ready = false;
		if (!ready) continue;
		used[v] = 1;
		cur.push_back(v);
		all_extensions(o, rank, cur, used, out);
		cur.pop_back();
		used[v] = 0;
	}
}

// All minimal T-words for u, as lists of reflection indices.
void all_twords(const Ctx& c, const WeylElement& u, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
	if (u.is_identity()) {
		out.push_back(cur);
		return;
	}
	for (std::size_t r = 0; r < c.rs.reflections.size(); ++r) {
		const auto& t = c.rs.reflections[r].element;
		if (!c.dg.divides(t, u)) continue;
		cur.push_back(static_cast<int>(r));
		WeylElement v = t * u;
		all_twords(c, v, cur, out);
		cur.pop_back();
	}
}

}  // namespace

TEST_CASE("coxeter element from orientation") {
	auto c = make("A3", "2>1,2>3");
	CHECK(c.ch.c_word == std::vector<int>{0, 2, 1});
	CHECK(c.ch.c == word_image(c.rs, {0, 2, 1}));
	CHECK(c.ch.gamma_word.format() == "1 3 2");

	auto a1 = make("A1");
	CHECK(a1.ch.c == a1.rs.simples[0]);

	auto a2 = make("A2", "1>2");
	CHECK(a2.ch.c == word_image(a2.rs, {1, 0}));

	// default orientation: small index to large, so larger vertices go left
	auto a3 = make("A3");
	CHECK(a3.ch.c_word == std::vector<int>{2, 1, 0});

	auto spec = DynkinSpec::parse("A3");
	CHECK_THROWS_AS(Orientation::parse(spec, "2>1"), input_error);
	CHECK_THROWS_AS(Orientation::parse(spec, "2>1,2>3,2>1"), input_error);
	CHECK_THROWS_AS(Orientation::parse(spec, "2>1,1>2"), input_error);
	CHECK_THROWS_AS(Orientation::parse(spec, "1>3,2>3"), input_error);
	CHECK_THROWS_AS(Orientation::parse(spec, "2>1,2>4"), input_error);
	CHECK_THROWS_AS(Orientation::parse(spec, "2>1,23"), input_error);
	CHECK(Orientation::parse(spec, " 2>1, 2>3 ").format() == "2>1,2>3");
}

TEST_CASE("coxeter element is independent of the linear extension") {
	for (auto [ty, orient] : std::initializer_list<std::pair<const char*, const char*>>{
	         {"A3", "2>1,2>3"}, {"A3", ""}, {"D4", ""}, {"D4", "2>1,2>3,2>4"}}) {
		auto spec = DynkinSpec::parse(ty);
		auto rs = build_root_system(spec);
		auto o = Orientation::parse(spec, orient);
		std::vector<std::vector<int>> exts;
		std::vector<int> cur;
		std::vector<char> used(spec.rank, 0);
		all_extensions(o, spec.rank, cur, used, exts);
		REQUIRE(!exts.empty());
		auto ch = CoxeterChoice::build(spec, o);
		CHECK(ch.c_word == *std::min_element(exts.begin(), exts.end()));
		for (const auto& e : exts) CHECK(word_image(rs, e) == ch.c);
	}
}

TEST_CASE("interval sizes") {
	CHECK(make("A1").dg.interval.size() == 2);
	CHECK(make("A2").dg.interval.size() == 5);
	CHECK(make("A3", "2>1,2>3").dg.interval.size() == 14);
	CHECK(make("A3").dg.interval.size() == 14);
	CHECK(make("A4").dg.interval.size() == 42);
	CHECK(make("D4").dg.interval.size() == 50);
	CHECK(make("D5").dg.interval.size() == 182);
}

TEST_CASE("coxeter numbers") {
	CHECK(make("A2").dg.h == 3);
	CHECK(make("A3").dg.h == 4);
	CHECK(make("A5").dg.h == 6);
	CHECK(make("D4").dg.h == 6);
	CHECK(make("D5").dg.h == 8);
}

TEST_CASE("reflection lifts") {
	auto c = make("A3", "2>1,2>3");
	// the lift of s_1 is the plain generator
	BraidWord l1 = dual_lift_reflection(c.dg, c.rs.reflections[c.rs.index_of({1, 0, 0})]);
	CHECK(l1.format() == "1");
	// the k=0, j=2 table entry is the prefix conjugate word
	WeylElement u = word_image(c.rs, {0, 2, 1, 2, 0});
	CHECK(is_reflection(u));
	int ui = -1;
	for (std::size_t r = 0; r < c.rs.reflections.size(); ++r)
		if (c.rs.reflections[r].element == u) ui = static_cast<int>(r);
	REQUIRE(ui >= 0);
	CHECK(c.dg.refl_lift[ui].format() == "1 3 2 -3 -1");
	// the lift of s_2 needs k >= 1 but is the braid sigma_2
	BraidWord l2 = dual_lift_reflection(c.dg, c.rs.reflections[c.rs.index_of({0, 1, 0})]);
	CHECK(l2.letters.size() > 1);
	CHECK(braid_equal(c.sg, l2, BraidWord::parse("2", 3)));

	auto a1 = make("A1");
	CHECK(dual_lift_reflection(a1.dg, a1.rs.reflections[0]).format() == "1");

	// lifts are pairwise distinct braids and project to their reflection
	for (const char* ty : {"A3", "D4"}) {
		auto cc = make(ty);
		std::vector<MixedNormalForm> nfs;
		for (std::size_t r = 0; r < cc.rs.reflections.size(); ++r) {
			const auto& w = cc.dg.refl_lift[r];
			CHECK(braid_image(cc.rs, w) == cc.rs.reflections[r].element);
			nfs.push_back(mixed_nf(cc.sg, w));
		}
		for (std::size_t i = 0; i < nfs.size(); ++i)
			for (std::size_t j = i + 1; j < nfs.size(); ++j) CHECK(nfs[i] != nfs[j]);
	}
}

TEST_CASE("noncrossing meet and join") {
	auto c = make("A3", "2>1,2>3");
	for (const auto& x : c.dg.interval) {
		CHECK(c.dg.nc_meet(x, x) == x);
		CHECK(c.dg.nc_join(x, x) == x);
		CHECK(c.dg.nc_meet(x, c.ch.c) == x);
		CHECK(c.dg.nc_join(x, WeylElement::identity(3)) == x);
	}
	CHECK(c.dg.nc_join(c.rs.simples[0], c.rs.simples[2]) == word_image(c.rs, {0, 2}));
	for (const auto& a : c.dg.interval)
		for (const auto& b : c.dg.interval) {
			CHECK(c.dg.nc_meet(a, b) == c.dg.nc_meet(b, a));
			CHECK(c.dg.nc_join(a, b) == c.dg.nc_join(b, a));
		}
	for (const char* ty : {"A2", "A3", "D4"}) {
		auto cc = make(ty);
		WeylElement j = WeylElement::identity(cc.rs.rank());
		for (const auto& t : cc.rs.reflections) j = cc.dg.nc_join(j, t.element);
		CHECK(j == cc.ch.c);
	}
}

TEST_CASE("dual descents") {
	auto c = make("A3", "2>1,2>3");
	CHECK(c.dg.dual_descents(WeylElement::identity(3)).empty());
	CHECK(c.dg.dual_descents(c.ch.c).size() == 6);
	auto d = c.dg.dual_descents(word_image(c.rs, {0, 2}));
	REQUIRE(d.size() == 2);
	std::set<RootVec> roots{c.rs.reflections[d[0]].root, c.rs.reflections[d[1]].root};
	CHECK(roots == std::set<RootVec>{{1, 0, 0}, {0, 0, 1}});

	// interval divisors are two-sided
	for (const char* ty : {"A3", "D4"}) {
		auto cc = make(ty);
		for (const auto& u : cc.dg.interval)
			for (const auto& t : cc.rs.reflections) {
				bool left = reflection_length(t.element * u) < reflection_length(u);
				bool right = reflection_length(u * t.element) < reflection_length(u);
				CHECK(left == right);
				CHECK(left == cc.dg.divides(t.element, u));
			}
	}
}

TEST_CASE("conjugate of a lift stays in the lift set") {
	for (const char* ty : {"A2", "A3", "D4"}) {
		auto c = make(ty);
		for (const auto& t1 : c.rs.reflections)
			for (const auto& t2 : c.rs.reflections) {
				WeylElement p = t1.element * t2.element;
				if (!c.dg.in_interval(p) || reflection_length(p) != 2) continue;
				WeylElement conj = t2.element * t1.element * t2.element;
				BraidWord lhs = dual_lift_reflection(c.dg, t2).inverse() +
				                dual_lift_reflection(c.dg, t1) +
				                dual_lift_reflection(c.dg, t2);
				int ci = -1;
				for (std::size_t r = 0; r < c.rs.reflections.size(); ++r)
					if (c.rs.reflections[r].element == conj) ci = static_cast<int>(r);
				REQUIRE(ci >= 0);
				CHECK(braid_equal(c.sg, lhs, c.dg.refl_lift[ci]));
			}
	}
}

TEST_CASE("every interval element is the join of its descents") {
	for (const char* ty : {"A3", "A4", "D4"}) {
		auto c = make(ty);
		for (const auto& u : c.dg.interval) {
			WeylElement j = WeylElement::identity(c.rs.rank());
			for (int r : c.dg.dual_descents(u)) j = c.dg.nc_join(j, c.rs.reflections[r].element);
			CHECK(j == u);
		}
	}
}

TEST_CASE("complement factorizations block outside reflections") {
	auto c = make("A3");
	for (const auto& bp : c.dg.interval) {
		WeylElement b = c.dg.comp_r(bp);  // bp * b = c with lengths adding
		for (const auto& t : c.rs.reflections) {
			if (c.dg.divides(t.element, bp) || c.dg.divides(t.element, b)) continue;
			bool found = false;
			for (const auto& tp : c.rs.reflections) {
				if (!c.dg.divides(tp.element, bp)) continue;
				if (!c.dg.in_interval(tp.element * t.element)) found = true;
			}
			CHECK(found);
		}
	}
}

TEST_CASE("dual normal form examples") {
	auto c = make("A3", "2>1,2>3");
	CHECK(dual_mixed_nf(c.dg, BraidWord{}).is_identity());

	auto nf = dual_mixed_nf(c.dg, c.ch.gamma_word);
	CHECK(nf.neg.empty());
	REQUIRE(nf.pos.size() == 1);
	CHECK(nf.pos[0] == c.ch.c);

	nf = dual_mixed_nf(c.dg, c.ch.gamma_word.inverse());
	CHECK(nf.pos.empty());
	REQUIRE(nf.neg.size() == 1);
	CHECK(nf.neg[0] == c.ch.c);

	nf = dual_mixed_nf(c.dg, BraidWord::parse("2 1", 3));
	CHECK(nf.neg.empty());
	CHECK(nf.pos.size() == 2);

	auto a2 = make("A2");
	auto nf2 = dual_mixed_nf(a2.dg, a2.ch.gamma_word);
	REQUIRE(nf2.pos.size() == 1);
	CHECK(nf2.pos[0] == a2.ch.c);
}

TEST_CASE("dual normal form shape and round trip") {
	std::mt19937_64 rng(41);
	for (const char* ty : {"A2", "A3", "D4"}) {
		auto c = make(ty);
		for (int it = 0; it < 80; ++it) {
			BraidWord w = random_word(rng, c.rs.rank(), it % 9);
			auto nf = dual_mixed_nf(c.dg, w);
			check_dual_greedy(c, nf);
			CHECK(dual_mixed_nf(c.dg, dual_nf_word(c.dg, nf)) == nf);
			// the two Garside structures agree on the element
			CHECK(braid_equal(c.sg, dual_nf_word(c.dg, nf), w));
			CHECK(nf.is_identity() == mixed_nf(c.sg, w).is_identity());
		}
	}
}

TEST_CASE("dual normal form is invariant under legal rewrites") {
	std::mt19937_64 rng(97);
	for (const char* ty : {"A2", "A3", "D4"}) {
		auto c = make(ty);
		for (int it = 0; it < 12; ++it) {
			BraidWord w = random_word(rng, c.rs.rank(), 5);
			auto nf = dual_mixed_nf(c.dg, w);
			BraidWord cur = w;
			for (int k = 0; k < 50; ++k) cur = random_rewrite(rng, c.spec, cur);
			CHECK(dual_mixed_nf(c.dg, cur) == nf);
		}
	}
}

TEST_CASE("lift braid does not depend on the minimal reflection word") {
	for (const char* ty : {"A3", "D4"}) {
		auto c = make(ty);
		for (const auto& u : c.dg.interval) {
			std::vector<std::vector<int>> words;
			std::vector<int> cur;
			all_twords(c, u, cur, words);
			REQUIRE(!words.empty());
			MixedNormalForm ref = mixed_nf(c.sg, c.dg.lift_word(u));
			for (const auto& tw : words) {
				BraidWord w;
				for (int r : tw) w = w + c.dg.refl_lift[r];
				CHECK(mixed_nf(c.sg, w) == ref);
			}
		}
	}
}

TEST_CASE("dual length oracle") {
	auto c = make("A3", "2>1,2>3");
	CHECK(dual_length_oracle(c.dg, BraidWord{}) == std::pair<int, int>{0, 0});
	CHECK(dual_length_oracle(c.dg, c.ch.gamma_word) == std::pair<int, int>{1, 0});
	CHECK(dual_length_oracle(c.dg, BraidWord::parse("2 1", 3)) == std::pair<int, int>{2, 0});
	CHECK(dual_length_oracle(c.dg, BraidWord::parse("1", 3).inverse()) ==
	      std::pair<int, int>{0, 1});
	// gamma^2 counts as two positive factors
	CHECK(dual_length_oracle(c.dg, c.ch.gamma_word + c.ch.gamma_word) ==
	      std::pair<int, int>{2, 0});
}
