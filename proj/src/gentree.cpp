#include "treepat/gentree.hpp"

#include <algorithm>
#include <stdexcept>

namespace treepat {

namespace {

// collapses the rightmost cherry; t must be internal
Tree drop_rightmost_cherry(const Tree& t) {
    if (t.left().is_leaf() && t.right().is_leaf()) return Tree::leaf();
    if (!t.right().is_leaf()) return Tree(t.left(), drop_rightmost_cherry(t.right()));
    return Tree(drop_rightmost_cherry(t.left()), t.right());
}

// in-order positions of closed vertices and leaves
void scan_inorder(const Tree& t, int& pos, int& last_closed, std::vector<int>& leaf_positions) {
    if (t.is_leaf()) {
        leaf_positions.push_back(pos++);
        return;
    }
    scan_inorder(t.left(), pos, last_closed, leaf_positions);
    if (!t.right().is_leaf()) last_closed = std::max(last_closed, pos);
    ++pos;
    scan_inorder(t.right(), pos, last_closed, leaf_positions);
}

// replaces the leaf with in-order leaf index `target` (counted left to right)
// by a cherry
Tree expand_leaf(const Tree& t, int target, int& seen) {
    if (t.is_leaf()) {
        if (seen++ == target) return Tree(Tree::leaf(), Tree::leaf());
        return t;
    }
    Tree l = expand_leaf(t.left(), target, seen);
    Tree r = expand_leaf(t.right(), target, seen);
    return Tree(l, r);
}

}  // namespace

Tree parent_tree(const Tree& t) {
    if (t.is_leaf()) throw std::invalid_argument("parent_tree: the 1-leaf tree has no parent");
    return drop_rightmost_cherry(t);
}

std::vector<Tree> descendant_trees(const Tree& t) {
    int pos = 0, last_closed = -1;
    std::vector<int> leaf_positions;
    scan_inorder(t, pos, last_closed, leaf_positions);
    std::vector<Tree> out;
    for (size_t i = 0; i < leaf_positions.size(); ++i) {
        if (leaf_positions[i] < last_closed) continue;
        int seen = 0;
        out.push_back(expand_leaf(t, static_cast<int>(i), seen));
    }
    return out;
}

std::vector<Tree> ancestry(const Tree& t) {
    std::vector<Tree> chain{t};
    while (!chain.back().is_leaf()) chain.push_back(parent_tree(chain.back()));
    std::reverse(chain.begin(), chain.end());
    return chain;
}

Int GenTreeTable::row_sum(int n) const {
    Int s = 0;
    for (const Int& v : rows.at(static_cast<size_t>(n - 1))) s += v;
    return s;
}

GenTreeTable gentree_table(int k, int nmax) {
    if (k < 3) throw std::invalid_argument("gentree_table: need k >= 3");
    if (nmax < 1) throw std::invalid_argument("gentree_table: need nmax >= 1");
    GenTreeTable table;
    table.k = k;
    if (k == 3) {
        // one label; exactly one avoider of the 3-leaf comb per size
        for (int n = 1; n <= nmax; ++n) table.rows.push_back({Int(1)});
        return table;
    }
    const int labels = k - 2;
    std::vector<Int> row(static_cast<size_t>(labels) + 1);  // index = label, [0] unused
    row[1] = 1;                                             // a_{1,1}
    table.rows.push_back({row.begin() + 1, row.end()});
    for (int n = 2; n <= nmax; ++n) {
        std::vector<Int> next(static_cast<size_t>(labels) + 1);
        for (int i = 2; i < labels; ++i)
            for (int m = i - 1; m <= labels; ++m) next[static_cast<size_t>(i)] += row[static_cast<size_t>(m)];
        next[static_cast<size_t>(labels)] = row[static_cast<size_t>(labels - 1)] + 2 * row[static_cast<size_t>(labels)];
        row = std::move(next);
        table.rows.push_back({row.begin() + 1, row.end()});
    }
    return table;
}

std::vector<Int> comb_sequence_gentree(int k, int nmax) {
    GenTreeTable table = gentree_table(k, nmax);
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(nmax));
    for (int n = 1; n <= nmax; ++n) out.push_back(table.row_sum(n));
    return out;
}

std::vector<long long> comb_recurrence_coeffs(int k) {
    if (k < 3) throw std::invalid_argument("comb_recurrence_coeffs: need k >= 3");
    std::vector<long long> out;
    for (int m = 1; m <= (k - 1) / 2; ++m) {
        Int c = binomial(k - m - 1, m);
        long long v = c.convert_to<long long>();
        out.push_back(m % 2 == 1 ? v : -v);
    }
    return out;
}

}  // namespace treepat
