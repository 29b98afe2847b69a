#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treepat {

/// Immutable full binary tree: every vertex has 0 or 2 ordered children.
/// Copies are cheap (subtrees are shared); all operations are pure, so
/// values can be used concurrently without synchronization.
class Tree {
public:
    Tree() = default;  // the 1-leaf tree
    Tree(const Tree& left, const Tree& right);

    static Tree leaf() { return Tree(); }

    bool is_leaf() const { return n_ == nullptr; }
    int leaf_count() const { return n_ ? n_->leaves : 1; }
    Tree left() const;
    Tree right() const;

    bool operator==(const Tree& other) const;
    bool operator!=(const Tree& other) const { return !(*this == other); }

private:
    struct Node {
        std::shared_ptr<const Node> l, r;
        int leaves;
    };
    explicit Tree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;
};

/// Leaf rank j within the k-leaf trees under the canonical ordering
/// (left subtree leaf count descending, then left rank, then right rank).
/// The first subscript of the t_{k_j} labels is `leaves`, the second `rank`.
struct TreeIndex {
    int leaves = 1;
    long long rank = 1;
    bool operator==(const TreeIndex&) const = default;
};

enum class Side { left, right };

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Grammar: Tree := "L" | "(" Tree " " Tree ")"; whitespace between tokens is
// tolerated. Throws parse_error with the character offset on malformed input.
Tree parse_tree(std::string_view text);
std::string render_tree(const Tree& t);

// Catalan(m), exact in 64 bits for m <= 35.
unsigned long long catalan(int m);

// All n-leaf trees exactly once, in canonical order; length Catalan(n-1).
// Throws std::invalid_argument for n < 1.
std::vector<Tree> enumerate_trees(int n);

namespace detail {
// cache-backed view for hot sweeps; the referenced list is immutable
const std::vector<Tree>& enumerate_trees_ref(int n);
}  // namespace detail

Tree comb(int k, Side side);
Tree reflect(const Tree& t);

// canonical_index and tree_from_index are mutually inverse.
TreeIndex canonical_index(const Tree& t);
Tree tree_from_index(TreeIndex ix);  // throws std::out_of_range on bad rank

// Strict weak order inducing the canonical enumeration: leaf count ascending,
// then within equal leaf counts the t_{k_j} rank order.
bool canonical_less(const Tree& a, const Tree& b);

}  // namespace treepat
