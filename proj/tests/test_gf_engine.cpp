#include "treepat/gf_engine.hpp"

#include "prop_util.hpp"
#include "treepat/oracle.hpp"

#include <doctest.h>

using namespace treepat;

namespace {

RationalGF golden_gf(std::vector<long long> num, std::vector<long long> den) {
    std::vector<Int> n(num.begin(), num.end()), d(den.begin(), den.end());
    return RationalGF(Polynomial(std::move(n)), Polynomial(std::move(d)));
}

}  // namespace

TEST_SUITE_BEGIN("gf_engine");

TEST_CASE("gf_single, known values") {
    CHECK(gf_single(Tree::leaf()) == RationalGF::zero());
    CHECK(gf_single(parse_tree("((L L) (L L))")) == golden_gf({0, 1, -1}, {1, -2}));
    CHECK(gf_single(comb(5, Side::left)) == golden_gf({0, 1, -2}, {1, -3, 1}));
}

TEST_CASE("gf_comb, known values") {
    CHECK(gf_comb(2) == RationalGF::x());
    CHECK(gf_comb(3) == golden_gf({0, 1}, {1, -1}));
    CHECK(gf_comb(7) == golden_gf({0, 1, -4, 3}, {1, -5, 6, -1}));
    CHECK(gf_comb(1) == RationalGF::zero());
}

TEST_CASE("gf_closed_form, known values") {
    CHECK(gf_closed_form(4) == golden_gf({0, 1, -1}, {1, -2}));
    CHECK(gf_closed_form(6) == golden_gf({0, 1, -3, 1}, {1, -4, 3}));
    CHECK(gf_closed_form(9) == golden_gf({0, 1, -6, 10, -4}, {1, -7, 15, -10, 1}));
    CHECK(gf_closed_form(1) == RationalGF::zero());
    CHECK(gf_closed_form(2) == RationalGF::x());
}

TEST_CASE("canonical_set") {
    Tree c3 = comb(3, Side::left), c4 = comb(4, Side::left), rc4 = comb(4, Side::right);
    CHECK(canonical_set({c3, c3}).elements() == std::vector<Tree>{c3});
    CHECK(canonical_set({c3, c4}).elements() == std::vector<Tree>{c3});  // c4 contains c3
    CHECK(canonical_set({c4, c3}, false).size() == 2);
    auto both = canonical_set({rc4, c4});
    CHECK(both.size() == 2);
    CHECK(both.elements()[0] == c4);  // canonical order: rank 1 before rank 5
    CHECK_THROWS_AS(canonical_set({}), std::invalid_argument);
}

TEST_CASE("gf_set, known values") {
    GfEngine engine;
    CHECK(engine.gf_set({comb(4, Side::left)}) == gf_single(comb(4, Side::left)));
    CHECK(engine.gf_set({comb(3, Side::left), comb(5, Side::right)}) ==
          golden_gf({0, 1, 1, 1, 1}, {1}));
    CHECK(engine.gf_set({comb(4, Side::left), comb(4, Side::right)}) ==
          golden_gf({0, 1, 1, 2, 3, 2, 1}, {1}));
}

TEST_CASE("gf_set short circuits") {
    GfEngine engine;
    CHECK(engine.gf_set({Tree::leaf(), comb(4, Side::left)}) == RationalGF::zero());
    CHECK(engine.gf_set({parse_tree("(L L)"), comb(4, Side::left)}) == RationalGF::x());
    CHECK_THROWS_AS(engine.gf_set(std::vector<Tree>{}), std::invalid_argument);
}

TEST_CASE("specialization: the sign-vector recursion reproduces the single-pattern equation") {
    GfEngine engine;
    for (int k = 1; k <= 6; ++k)
        for (const Tree& t : enumerate_trees(k)) CHECK(engine.gf_set({t}) == gf_single(t));
}

TEST_CASE("one Wilf class per leaf count, k <= 6") {
    for (int k = 1; k <= 6; ++k) {
        RationalGF expect = gf_closed_form(k);
        CHECK(gf_comb(k) == expect);
        for (const Tree& t : enumerate_trees(k)) CHECK(gf_single(t) == expect);
    }
}

TEST_CASE("oracle equivalence for pairs of 4-leaf patterns") {
    GfEngine engine;
    auto t4 = enumerate_trees(4);
    for (size_t i = 0; i < t4.size(); ++i)
        for (size_t j = i + 1; j < t4.size(); ++j) {
            PatternSet s = canonical_set({t4[i], t4[j]});
            auto series = engine.gf_set(s).series(9);
            for (int n = 1; n <= 9; ++n)
                CHECK(series[static_cast<size_t>(n)] == Int(count_avoiders(n, s, ContainMode::noncontiguous)));
        }
}

TEST_CASE("three-pattern sets match the brute-force oracle") {
    GfEngine engine;
    std::vector<std::vector<Tree>> triples{
        {parse_tree("(((L L) L) L)"), parse_tree("((L L) (L L))"), parse_tree("(L (L (L L)))")},
        {parse_tree("((L (L L)) L)"), parse_tree("(L ((L L) L))"), parse_tree("((L L) (L L))")},
        {comb(5, Side::left), comb(5, Side::right), parse_tree("((L L) ((L L) L))")},
    };
    for (const auto& pats : triples) {
        PatternSet s = canonical_set(pats);
        REQUIRE(s.size() == 3);  // incomparable, nothing minimized away
        auto series = engine.gf_set(s).series(9);
        for (int n = 1; n <= 9; ++n)
            CHECK(Int(count_avoiders(n, s, ContainMode::noncontiguous)) == series[static_cast<size_t>(n)]);
    }
}

TEST_CASE("reflection invariance of gf_set") {
    GfEngine engine;
    std::mt19937_64 rng(20240815);
    for (int it = 0; it < 300; ++it) {
        std::vector<Tree> pats{testutil::random_tree_up_to(rng, 6), testutil::random_tree_up_to(rng, 6)};
        std::vector<Tree> refl{reflect(pats[0]), reflect(pats[1])};
        CHECK(engine.gf_set(pats) == engine.gf_set(refl));
    }
}

TEST_CASE("property: redundancy invariance with minimization off, 1000 cases") {
    GfEngine engine(/*minimize=*/false);
    std::mt19937_64 rng(20240816);
    for (int it = 0; it < 1000; ++it) {
        Tree s1 = testutil::random_tree(rng, 3 + static_cast<int>(rng() % 3));
        Tree s2 = testutil::random_tree(rng, 3 + static_cast<int>(rng() % 3));
        Tree u = testutil::grow_tree(rng, (rng() & 1) ? s1 : s2, 1 + static_cast<int>(rng() % 3));
        REQUIRE((contains_noncontiguous(u, s1) || contains_noncontiguous(u, s2)));
        RationalGF with = engine.gf_set({s1, s2, u});
        RationalGF without = engine.gf_set({s1, s2});
        CHECK(with == without);
    }
}

TEST_CASE("monotone domination: coefficients bounded by Catalan numbers") {
    GfEngine engine;
    auto t4 = enumerate_trees(4);
    for (size_t i = 0; i < t4.size(); ++i)
        for (size_t j = i + 1; j < t4.size(); ++j) {
            auto series = engine.gf_set(canonical_set({t4[i], t4[j]})).series(20);
            for (int n = 1; n <= 20; ++n) {
                CHECK(series[static_cast<size_t>(n)] >= 0);
                CHECK(series[static_cast<size_t>(n)] <= Int(catalan(n - 1)));
            }
        }
}

TEST_CASE("memoized engine is deterministic across repeated and concurrent queries") {
    GfEngine engine;
    Tree a = comb(5, Side::left), b = parse_tree("((L (L L)) (L L))");
    RationalGF first = engine.gf_set({a, b});
    RationalGF expect = GfEngine().gf_set({a, b});
    CHECK(first == expect);
    std::vector<RationalGF> results(8);
#pragma omp parallel for
    for (int i = 0; i < 8; ++i) results[static_cast<size_t>(i)] = engine.gf_set({a, b});
    for (const auto& r : results) CHECK(r == expect);
}

TEST_SUITE_END();
