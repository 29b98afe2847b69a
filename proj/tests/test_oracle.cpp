#include "treepat/oracle.hpp"

#include "treepat/gf_engine.hpp"

#include <doctest.h>

using namespace treepat;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("count_avoiders, known values") {
    CHECK(count_avoiders(6, canonical_set({comb(3, Side::left)}), ContainMode::noncontiguous) == 1);
    CHECK(count_avoiders(7, canonical_set({comb(4, Side::left)}), ContainMode::noncontiguous) == 32);
    CHECK(count_avoiders(5, canonical_set({comb(4, Side::left)}), ContainMode::contiguous) == 9);
    CHECK_THROWS_AS(count_avoiders(0, canonical_set({comb(3, Side::left)}), ContainMode::noncontiguous),
                    std::invalid_argument);
}

TEST_CASE("sequence_brute, known values") {
    CHECK(sequence_brute(8, canonical_set({comb(5, Side::left)}), ContainMode::noncontiguous) ==
          std::vector<std::uint64_t>{1, 1, 2, 5, 13, 34, 89, 233});
    // {t_{4_1}, t_{4_2}} gives the Fibonacci numbers
    PatternSet fib = canonical_set({parse_tree("(((L L) L) L)"), parse_tree("((L (L L)) L)")});
    CHECK(sequence_brute(8, fib, ContainMode::noncontiguous) ==
          std::vector<std::uint64_t>{1, 1, 2, 3, 5, 8, 13, 21});
    CHECK(sequence_brute(4, canonical_set({comb(2, Side::left)}), ContainMode::noncontiguous) ==
          std::vector<std::uint64_t>{1, 0, 0, 0});
}

TEST_CASE("parallel kernel matches the serial reference") {
    std::vector<PatternSet> sets{
        canonical_set({comb(4, Side::left)}),
        canonical_set({comb(5, Side::right)}),
        canonical_set({parse_tree("((L L) (L L))"), parse_tree("(L (L (L L)))")}),
    };
    for (const auto& s : sets)
        for (int n = 1; n <= 10; ++n)
            for (ContainMode m : {ContainMode::noncontiguous, ContainMode::contiguous})
                CHECK(count_avoiders(n, s, m) == count_avoiders_serial(n, s, m));
}

TEST_CASE("single-pattern counts match gf series, k <= 6, n <= 11") {
    for (int k = 1; k <= 6; ++k)
        for (const Tree& t : enumerate_trees(k)) {
            auto series = gf_single(t).series(11);
            PatternSet s = canonical_set({t});
            for (int n = 1; n <= 11; ++n)
                CHECK(Int(count_avoiders(n, s, ContainMode::noncontiguous)) ==
                      series[static_cast<size_t>(n)]);
        }
}

TEST_CASE("contiguous avoiders are never fewer than noncontiguous avoiders") {
    for (int k = 3; k <= 5; ++k)
        for (const Tree& t : enumerate_trees(k)) {
            PatternSet s = canonical_set({t});
            for (int n = 1; n <= 9; ++n)
                CHECK(count_avoiders(n, s, ContainMode::contiguous) >=
                      count_avoiders(n, s, ContainMode::noncontiguous));
        }
}

TEST_CASE("counts are reflection invariant") {
    for (int k = 3; k <= 5; ++k)
        for (const Tree& t : enumerate_trees(k)) {
            PatternSet s = canonical_set({t});
            PatternSet r = canonical_set({reflect(t)});
            for (int n = 1; n <= 9; ++n)
                CHECK(count_avoiders(n, s, ContainMode::noncontiguous) ==
                      count_avoiders(n, r, ContainMode::noncontiguous));
        }
}

TEST_SUITE_END();
