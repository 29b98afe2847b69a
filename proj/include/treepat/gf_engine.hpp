#pragma once

#include "treepat/matcher.hpp"
#include "treepat/ratfun.hpp"
#include "treepat/tree.hpp"

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace treepat {

/// Canonicalized finite set of tree patterns: deduplicated and ordered by
/// canonical index. Serves as the avoidance constraint and as a memo key.
class PatternSet {
public:
    const std::vector<Tree>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    int total_leaves() const;
    std::string key() const;  // rendered elements joined with '|'

    friend PatternSet canonical_set(std::vector<Tree> trees, bool minimize);

private:
    explicit PatternSet(std::vector<Tree> elems) : elems_(std::move(elems)) {}
    std::vector<Tree> elems_;
};

/// Dedup + canonical order; with minimize (the default) also drops every
/// element that non-contiguously contains another element, since avoiding
/// the smaller pattern already forces avoiding the larger one.
/// Throws std::invalid_argument on an empty list.
PatternSet canonical_set(std::vector<Tree> trees, bool minimize = true);

/// g_t(x) via the single-pattern recursion
/// g_t = (x - g_{t_l} g_{t_r}) / (1 - g_{t_l} - g_{t_r}), base g_leaf = 0.
RationalGF gf_single(const Tree& t);

/// g_{c_k}(x) by iterating g_{c_k} = x / (1 - g_{c_{k-1}}) from g_{c_1} = 0.
RationalGF gf_comb(int k);

/// The closed form for any k-leaf pattern: signed binomial sums in numerator
/// and denominator. Depends only on k.
RationalGF gf_closed_form(int k);

/// Avoidance generating functions for arbitrary finite pattern sets via the
/// sign-vector inclusion-exclusion recursion, memoized on canonical sets.
/// Deterministic and safe for concurrent use.
class GfEngine {
public:
    explicit GfEngine(bool minimize = true) : minimize_(minimize) {}

    RationalGF gf_set(const PatternSet& s);
    RationalGF gf_set(std::vector<Tree> patterns);

    bool minimizes() const { return minimize_; }

private:
    RationalGF compute(const PatternSet& s);

    std::unordered_map<std::string, RationalGF> memo_;
    std::mutex mu_;
    bool minimize_;
};

}  // namespace treepat
