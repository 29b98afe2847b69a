#include "treepat/permbridge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace treepat {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<bool> seen(entries_.size(), false);
    for (int v : entries_) {
        if (v < 1 || v > static_cast<int>(entries_.size()) || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("permutation entries must be 1..n, each exactly once");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::decreasing(int n) {
    std::vector<int> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(e));
}

Permutation Permutation::increasing(int n) {
    std::vector<int> e(static_cast<size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

std::string render_perm(const Permutation& p) {
    std::string out;
    bool compact = p.size() <= 9;
    for (int v : p.entries()) {
        if (!compact && !out.empty()) out.push_back(',');
        out += std::to_string(v);
    }
    return out;
}

Permutation parse_perm(std::string_view text) {
    std::vector<int> entries;
    if (text.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos < text.size()) {
            size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            entries.push_back(std::stoi(std::string(text.substr(pos, next - pos))));
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c == ' ') continue;
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation literal");
            entries.push_back(c - '0');
        }
    }
    return Permutation(std::move(entries));
}

namespace {

// labels for the internal vertices of t, read in order; block is [base+1 ..]
void perm_labels(const Tree& t, int base, std::vector<int>& out) {
    if (t.is_leaf()) return;
    int left_internals = t.left().leaf_count() - 1;
    int internals = t.leaf_count() - 1;
    perm_labels(t.left(), base, out);
    out.push_back(base + internals);
    perm_labels(t.right(), base + left_internals, out);
}

Tree tree_from_block(const int* e, int len) {
    if (len == 0) return Tree::leaf();
    int maxpos = static_cast<int>(std::max_element(e, e + len) - e);
    // in a 231-avoider the values before the maximum are exactly the
    // smallest ones; anything else witnesses a 231 occurrence
    int lo = *std::min_element(e, e + len);
    for (int i = 0; i < maxpos; ++i)
        if (e[i] >= lo + maxpos) throw std::invalid_argument("permutation contains 231");
    return Tree(tree_from_block(e, maxpos), tree_from_block(e + maxpos + 1, len - maxpos - 1));
}

}  // namespace

Permutation tree_to_perm(const Tree& t) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(t.leaf_count() - 1));
    perm_labels(t, 0, out);
    return Permutation(std::move(out));
}

Tree perm_to_tree(const Permutation& p) {
    return tree_from_block(p.entries().data(), p.size());
}

namespace {

bool contains_from(const std::vector<int>& p, const std::vector<int>& q, size_t pi, size_t qi,
                   std::vector<int>& chosen) {
    if (qi == q.size()) return true;
    if (p.size() - pi < q.size() - qi) return false;
    for (size_t i = pi; i < p.size(); ++i) {
        bool ok = true;
        for (size_t a = 0; a < qi; ++a) {
            if ((chosen[a] < p[i]) != (q[a] < q[qi])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen[qi] = p[i];
        if (contains_from(p, q, i + 1, qi + 1, chosen)) return true;
    }
    return false;
}

}  // namespace

bool perm_contains(const Permutation& p, const Permutation& q) {
    if (q.size() == 0) return true;
    if (q.size() > p.size()) return false;
    std::vector<int> chosen(static_cast<size_t>(q.size()));
    return contains_from(p.entries(), q.entries(), 0, 0, chosen);
}

namespace {

// does prefix contain q with the occurrence ending at the last entry?
bool contains_ending_at_last(const std::vector<int>& prefix, const std::vector<int>& q) {
    size_t k = q.size();
    if (k == 0 || prefix.size() < k) return false;
    std::vector<size_t> idx(k);
    idx[k - 1] = prefix.size() - 1;
    // choose indices for q[0..k-2] among prefix[0..n-2], order-isomorphically
    struct Rec {
        const std::vector<int>& p;
        const std::vector<int>& q;
        std::vector<size_t>& idx;
        bool run(size_t qi, size_t from) {
            size_t k = q.size();
            if (qi == k - 1) {
                for (size_t a = 0; a + 1 < k; ++a)
                    if ((p[idx[a]] < p[idx[k - 1]]) != (q[a] < q[k - 1])) return false;
                return true;
            }
            for (size_t i = from; i + 1 < p.size(); ++i) {
                bool ok = true;
                for (size_t a = 0; a < qi; ++a)
                    if ((p[idx[a]] < p[i]) != (q[a] < q[qi])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                idx[qi] = i;
                if (run(qi + 1, i + 1)) return true;
            }
            return false;
        }
    } rec{prefix, q, idx};
    return rec.run(0, 0);
}

std::uint64_t dfs_count(std::vector<int>& prefix, std::vector<bool>& used, int n,
                        const std::vector<Permutation>& q) {
    if (static_cast<int>(prefix.size()) == n) return 1;
    std::uint64_t total = 0;
    for (int v = 1; v <= n; ++v) {
        if (used[static_cast<size_t>(v - 1)]) continue;
        prefix.push_back(v);
        used[static_cast<size_t>(v - 1)] = true;
        bool pruned = false;
        for (const Permutation& pat : q)
            if (contains_ending_at_last(prefix, pat.entries())) {
                pruned = true;
                break;
            }
        if (!pruned) total += dfs_count(prefix, used, n, q);
        prefix.pop_back();
        used[static_cast<size_t>(v - 1)] = false;
    }
    return total;
}

}  // namespace

std::uint64_t count_avoiding_perms_serial(int n, const std::vector<Permutation>& q) {
    if (n < 0) throw std::invalid_argument("count_avoiding_perms: negative length");
    for (const Permutation& pat : q)
        if (pat.size() == 0) return 0;  // the empty pattern is contained in everything
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<size_t>(n), false);
    return dfs_count(prefix, used, n, q);
}

std::uint64_t count_avoiding_perms(int n, const std::vector<Permutation>& q) {
    if (n < 0) throw std::invalid_argument("count_avoiding_perms: negative length");
    for (const Permutation& pat : q)
        if (pat.size() == 0) return 0;
    if (n < 2) return count_avoiding_perms_serial(n, q);
    std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (int first = 1; first <= n; ++first) {
        std::vector<int> prefix{first};
        std::vector<bool> used(static_cast<size_t>(n), false);
        used[static_cast<size_t>(first - 1)] = true;
        total += dfs_count(prefix, used, n, q);
    }
    return total;
}

std::vector<std::vector<Permutation>> find_perm_sets_matching(const std::vector<std::uint64_t>& target) {
    const int nmax = static_cast<int>(target.size());
    std::vector<Permutation> len3, len4;
    {
        std::vector<int> v3{1, 2, 3}, v4{1, 2, 3, 4};
        do len3.emplace_back(v3);
        while (std::next_permutation(v3.begin(), v3.end()));
        do len4.emplace_back(v4);
        while (std::next_permutation(v4.begin(), v4.end()));
    }
    std::vector<std::vector<Permutation>> candidates;
    for (const Permutation& a : len3)
        for (size_t i = 0; i < len4.size(); ++i)
            for (size_t j = i + 1; j < len4.size(); ++j)
                candidates.push_back({a, len4[i], len4[j]});

    std::vector<std::vector<Permutation>> matches;
    const auto total = static_cast<long long>(candidates.size());
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < total; ++c) {
        const auto& q = candidates[static_cast<size_t>(c)];
        bool ok = true;
        for (int m = 1; m <= nmax && ok; ++m)
            if (count_avoiding_perms_serial(m, q) != target[static_cast<size_t>(m - 1)]) ok = false;
        if (ok) {
#pragma omp critical
            matches.push_back(q);
        }
    }
    return matches;
}

}  // namespace treepat
