#include "treepat/classifier.hpp"

#include "golden_tables.hpp"
#include "treepat/oracle.hpp"

#include <doctest.h>

using namespace treepat;

namespace {

RationalGF golden_gf(const testutil::GoldenClass& c) {
    std::vector<Int> n(c.num.begin(), c.num.end()), d(c.den.begin(), c.den.end());
    return RationalGF(Polynomial(std::move(n)), Polynomial(std::move(d)));
}

}  // namespace

TEST_SUITE_BEGIN("classifier");

TEST_CASE("incomparable_pairs counts") {
    CHECK(incomparable_pairs(3, 4).size() == 1);
    CHECK(incomparable_pairs(3, 3).size() == 1);  // {t_31, t_32}, self-paired under reflection
    CHECK(incomparable_pairs(3, 5).size() == 1);
    CHECK(incomparable_pairs(4, 4).size() == 6);
    CHECK(incomparable_pairs(4, 5).size() == 20);
    CHECK(incomparable_pairs(5, 5).size() == 49);
    CHECK(incomparable_pairs(2, 4).empty());  // the 2-leaf tree is contained in everything
}

TEST_CASE("the single (3,4) pair is the comb pair") {
    auto pairs = incomparable_pairs(3, 4);
    REQUIRE(pairs.size() == 1);
    auto elems = pairs[0].elements();
    // up to simultaneous reflection
    bool direct = elems[0] == comb(3, Side::left) && elems[1] == comb(4, Side::right);
    bool mirrored = elems[0] == comb(3, Side::right) && elems[1] == comb(4, Side::left);
    CHECK((direct || mirrored));
}

TEST_CASE("all 14 single 5-leaf patterns form one class") {
    GfEngine engine;
    std::vector<PatternSet> sets;
    for (const Tree& t : enumerate_trees(5)) sets.push_back(canonical_set({t}));
    auto classes = wilf_classify(engine, sets, 15);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members.size() == 14);
    CHECK(classes[0].gf == gf_closed_form(5));
}

TEST_CASE("pair classes match the golden tables") {
    GfEngine engine;
    for (const auto& table : testutil::golden_pair_tables()) {
        auto pairs = incomparable_pairs(table.k1, table.k2);
        auto classes = wilf_classify(engine, pairs, 15);
        REQUIRE(classes.size() == table.classes.size());
        for (size_t i = 0; i < classes.size(); ++i) {
            CHECK(classes[i].gf == golden_gf(table.classes[i]));
            REQUIRE(classes[i].sequence_prefix.size() == 15);
            for (size_t j = 0; j < 15; ++j)
                CHECK(classes[i].sequence_prefix[j] == Int(table.classes[i].terms[j]));
        }
    }
}

TEST_CASE("classified GFs match the brute-force oracle on a representative") {
    GfEngine engine;
    for (int k1 : {4}) {
        auto classes = wilf_classify(engine, incomparable_pairs(k1, 4), 15);
        for (const auto& c : classes) {
            auto series = c.gf.series(9);
            const PatternSet& rep = c.members.front();
            for (int n = 1; n <= 9; ++n)
                CHECK(Int(count_avoiders(n, rep, ContainMode::noncontiguous)) ==
                      series[static_cast<size_t>(n)]);
        }
    }
}

TEST_CASE("wilf_classify input validation") {
    GfEngine engine;
    CHECK_THROWS_AS(wilf_classify(engine, {}, 15), std::invalid_argument);
}

TEST_SUITE_END();
