#pragma once

#include "treepat/gf_engine.hpp"
#include "treepat/ratfun.hpp"

#include <vector>

namespace treepat {

/// One Wilf class: pattern sets sharing the same normalized avoidance GF.
struct WilfClass {
    RationalGF gf;
    std::vector<PatternSet> members;
    std::vector<Int> sequence_prefix;  // av(1..prefix_len)
};

/// Partitions the given sets by exact GF equality; classes are ordered by
/// sequence prefix lexicographically, members keep their input order.
std::vector<WilfClass> wilf_classify(GfEngine& engine, const std::vector<PatternSet>& sets, int prefix_len);

/// All unordered pairs {t, s} with the given leaf counts, neither containing
/// the other non-contiguously, deduplicated up to simultaneous reflection.
std::vector<PatternSet> incomparable_pairs(int k1, int k2);

}  // namespace treepat
