#pragma once

#include "treepat/tree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace treepat {

/// A rearrangement of 1..n; n = 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);  // validates 1..n each once

    static Permutation decreasing(int n);
    static Permutation increasing(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> entries_;
};

// One-line notation: "24135" for n <= 9, comma-separated beyond.
std::string render_perm(const Permutation& p);
Permutation parse_perm(std::string_view text);

/// Labels the internal vertices (left subtree gets the smaller label block,
/// each subtree root takes its block's largest label) and reads them in
/// left-to-right order. The image of an n-leaf tree is a 231-avoiding
/// permutation of length n-1; the k-leaf right comb maps to the decreasing
/// permutation of length k-1.
Permutation tree_to_perm(const Tree& t);

/// Inverse of tree_to_perm. Throws std::invalid_argument if p contains 231.
Tree perm_to_tree(const Permutation& p);

/// Classical pattern containment: some subsequence of p is order-isomorphic
/// to q. The empty pattern is contained in everything.
bool perm_contains(const Permutation& p, const Permutation& q);

/// |{pi in S(n) : pi avoids every pattern in q}| by exhaustive enumeration
/// with prefix pruning. The parallel variant partitions by first entry.
std::uint64_t count_avoiding_perms(int n, const std::vector<Permutation>& q);
std::uint64_t count_avoiding_perms_serial(int n, const std::vector<Permutation>& q);

/// Exhaustive sweep over pattern sets {one length-3, two distinct length-4}:
/// returns every set whose avoidance counts s_Q(1..nmax) equal `target`.
/// Slow; used to confirm no such set matches a given tree-avoidance sequence.
std::vector<std::vector<Permutation>> find_perm_sets_matching(const std::vector<std::uint64_t>& target);

}  // namespace treepat
