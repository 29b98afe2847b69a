#pragma once

#include "treepat/ratfun.hpp"
#include "treepat/tree.hpp"

#include <vector>

namespace treepat {

/// Deletes the rightmost leaf whose sibling is also a leaf, together with
/// that sibling (their parent becomes a leaf). Throws std::invalid_argument
/// on the 1-leaf tree.
Tree parent_tree(const Tree& t);

/// All trees whose parent_tree is t, in left-to-right order of the expanded
/// leaf. Eligible leaves are those to the right of every closed vertex
/// (an internal vertex whose right child is internal).
std::vector<Tree> descendant_trees(const Tree& t);

/// The unique chain leaf = t_1, ..., t_n = t with t_i = parent_tree(t_{i+1}).
std::vector<Tree> ancestry(const Tree& t);

/// Row-by-row table of a_{n,i}: the number of n-leaf avoiders of the k-leaf
/// left comb with exactly i descendants that also avoid it. Labels run
/// 1..k-2; label 1 occurs only at n = 1.
struct GenTreeTable {
    int k = 0;
    std::vector<std::vector<Int>> rows;  // rows[n-1][i-1] = a_{n,i}

    Int row_sum(int n) const;  // a_n
};

GenTreeTable gentree_table(int k, int nmax);

/// (a_1, ..., a_nmax) built from the generating-tree succession rule;
/// equals the series of gf_comb(k). Throws std::invalid_argument for k < 3.
std::vector<Int> comb_sequence_gentree(int k, int nmax);

/// Coefficients (c_1, c_2, ...) of the linear recurrence
/// a_n = c_1 a_{n-1} + c_2 a_{n-2} + ..., with c_m = (-1)^(m+1) C(k-m-1, m).
std::vector<long long> comb_recurrence_coeffs(int k);

}  // namespace treepat
