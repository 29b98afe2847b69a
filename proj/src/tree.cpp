#include "treepat/tree.hpp"

#include <deque>
#include <mutex>

namespace treepat {

Tree::Tree(const Tree& left, const Tree& right) {
    auto node = std::make_shared<Node>();
    node->l = left.n_;
    node->r = right.n_;
    node->leaves = left.leaf_count() + right.leaf_count();
    n_ = std::move(node);
}

Tree Tree::left() const {
    if (!n_) throw std::logic_error("leaf has no children");
    return Tree(n_->l);
}

Tree Tree::right() const {
    if (!n_) throw std::logic_error("leaf has no children");
    return Tree(n_->r);
}

bool Tree::operator==(const Tree& other) const {
    if (n_ == other.n_) return true;
    if (!n_ || !other.n_) return false;
    if (n_->leaves != other.n_->leaves) return false;
    return Tree(n_->l) == Tree(other.n_->l) && Tree(n_->r) == Tree(other.n_->r);
}

namespace {

void skip_ws(std::string_view s, size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) ++pos;
}

Tree parse_node(std::string_view s, size_t& pos) {
    skip_ws(s, pos);
    if (pos >= s.size()) throw parse_error("unexpected end of input, expected 'L' or '('", pos);
    char c = s[pos];
    if (c == 'L') {
        ++pos;
        return Tree::leaf();
    }
    if (c == '(') {
        ++pos;
        Tree l = parse_node(s, pos);
        Tree r = parse_node(s, pos);
        skip_ws(s, pos);
        if (pos >= s.size() || s[pos] != ')')
            throw parse_error("expected ')'", pos);
        ++pos;
        return Tree(l, r);
    }
    throw parse_error(std::string("unexpected character '") + c + "', expected 'L' or '('", pos);
}

}  // namespace

Tree parse_tree(std::string_view text) {
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos >= text.size()) throw parse_error("empty input", pos);
    Tree t = parse_node(text, pos);
    skip_ws(text, pos);
    if (pos < text.size()) throw parse_error("trailing characters after tree", pos);
    return t;
}

namespace {

void render_rec(const Tree& t, std::string& out) {
    if (t.is_leaf()) {
        out.push_back('L');
        return;
    }
    out.push_back('(');
    render_rec(t.left(), out);
    out.push_back(' ');
    render_rec(t.right(), out);
    out.push_back(')');
}

}  // namespace

std::string render_tree(const Tree& t) {
    std::string out;
    out.reserve(static_cast<size_t>(t.leaf_count()) * 4);
    render_rec(t, out);
    return out;
}

unsigned long long catalan(int m) {
    if (m < 0) throw std::invalid_argument("catalan: negative index");
    if (m > 35) throw std::invalid_argument("catalan: index too large for 64-bit result");
    static const auto table = [] {
        std::vector<unsigned long long> c(36);
        c[0] = 1;
        for (int n = 1; n <= 35; ++n) {
            unsigned long long s = 0;
            for (int i = 0; i < n; ++i) s += c[static_cast<size_t>(i)] * c[static_cast<size_t>(n - 1 - i)];
            c[static_cast<size_t>(n)] = s;
        }
        return c;
    }();
    return table[static_cast<size_t>(m)];
}

namespace detail {

const std::vector<Tree>& enumerate_trees_ref(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: need n >= 1 (no trees with zero leaves)");
    if (n > 16) throw std::invalid_argument("enumerate_trees: n > 16 would exhaust memory; use the gf engine");
    static std::mutex mu;
    static std::deque<std::vector<Tree>> cache;  // cache[k] = k-leaf trees; deque keeps refs stable
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(cache.size()) <= n) {
        if (cache.empty()) cache.push_back({});  // no 0-leaf trees
        for (int k = static_cast<int>(cache.size()); k <= n; ++k) {
            std::vector<Tree> out;
            if (k == 1) {
                out.push_back(Tree::leaf());
            } else {
                out.reserve(catalan(k - 1));
                for (int l = k - 1; l >= 1; --l)
                    for (const Tree& lt : cache[static_cast<size_t>(l)])
                        for (const Tree& rt : cache[static_cast<size_t>(k - l)]) out.emplace_back(lt, rt);
            }
            cache.push_back(std::move(out));
        }
    }
    return cache[static_cast<size_t>(n)];
}

}  // namespace detail

std::vector<Tree> enumerate_trees(int n) { return detail::enumerate_trees_ref(n); }

Tree comb(int k, Side side) {
    if (k < 1) throw std::invalid_argument("comb: need k >= 1");
    Tree t = Tree::leaf();
    for (int i = 2; i <= k; ++i) t = side == Side::left ? Tree(t, Tree::leaf()) : Tree(Tree::leaf(), t);
    return t;
}

Tree reflect(const Tree& t) {
    if (t.is_leaf()) return t;
    return Tree(reflect(t.right()), reflect(t.left()));
}

TreeIndex canonical_index(const Tree& t) {
    int k = t.leaf_count();
    if (t.is_leaf()) return {1, 1};
    int l = t.left().leaf_count();
    unsigned long long rank = 0;
    for (int lp = k - 1; lp > l; --lp) rank += catalan(lp - 1) * catalan(k - lp - 1);
    TreeIndex li = canonical_index(t.left());
    TreeIndex ri = canonical_index(t.right());
    rank += static_cast<unsigned long long>(li.rank - 1) * catalan(k - l - 1);
    rank += static_cast<unsigned long long>(ri.rank);
    return {k, static_cast<long long>(rank)};
}

Tree tree_from_index(TreeIndex ix) {
    if (ix.leaves < 1) throw std::out_of_range("tree_from_index: leaves must be positive");
    if (ix.rank < 1 || static_cast<unsigned long long>(ix.rank) > catalan(ix.leaves - 1))
        throw std::out_of_range("tree_from_index: rank out of range for " + std::to_string(ix.leaves) + " leaves");
    if (ix.leaves == 1) return Tree::leaf();
    unsigned long long j = static_cast<unsigned long long>(ix.rank) - 1;
    for (int l = ix.leaves - 1; l >= 1; --l) {
        unsigned long long block = catalan(l - 1) * catalan(ix.leaves - l - 1);
        if (j >= block) {
            j -= block;
            continue;
        }
        unsigned long long nright = catalan(ix.leaves - l - 1);
        TreeIndex li{l, static_cast<long long>(j / nright) + 1};
        TreeIndex ri{ix.leaves - l, static_cast<long long>(j % nright) + 1};
        return Tree(tree_from_index(li), tree_from_index(ri));
    }
    throw std::logic_error("tree_from_index: unreachable");
}

bool canonical_less(const Tree& a, const Tree& b) {
    if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count();
    if (a.is_leaf()) return false;  // equal leaves, both leaves -> equal
    int al = a.left().leaf_count(), bl = b.left().leaf_count();
    if (al != bl) return al > bl;
    if (canonical_less(a.left(), b.left())) return true;
    if (canonical_less(b.left(), a.left())) return false;
    return canonical_less(a.right(), b.right());
}

}  // namespace treepat
