#include "treepat/matcher.hpp"

#include <stdexcept>

namespace treepat {

bool contains_noncontiguous(const Tree& host, const Tree& pattern) {
    if (pattern.is_leaf()) return true;
    if (host.is_leaf()) return false;
    if (host.leaf_count() < pattern.leaf_count()) return false;
    Tree hl = host.left(), hr = host.right();
    return (contains_noncontiguous(hl, pattern.left()) && contains_noncontiguous(hr, pattern.right())) ||
           contains_noncontiguous(hl, pattern) || contains_noncontiguous(hr, pattern);
}

namespace {

// exact copy rooted at the root of host
bool rooted_contiguous(const Tree& host, const Tree& pattern) {
    if (pattern.is_leaf()) return true;
    if (host.is_leaf()) return false;
    return rooted_contiguous(host.left(), pattern.left()) && rooted_contiguous(host.right(), pattern.right());
}

}  // namespace

bool contains_contiguous(const Tree& host, const Tree& pattern) {
    if (rooted_contiguous(host, pattern)) return true;
    if (host.is_leaf()) return false;
    return contains_contiguous(host.left(), pattern) || contains_contiguous(host.right(), pattern);
}

bool contains(const Tree& host, const Tree& pattern, ContainMode mode) {
    return mode == ContainMode::contiguous ? contains_contiguous(host, pattern)
                                           : contains_noncontiguous(host, pattern);
}

bool avoids_all(const Tree& host, const std::vector<Tree>& patterns, ContainMode mode) {
    if (patterns.empty()) throw std::invalid_argument("avoids_all: empty pattern set is ambiguous");
    for (const Tree& p : patterns)
        if (contains(host, p, mode)) return false;
    return true;
}

}  // namespace treepat
