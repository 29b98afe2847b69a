#include "treepat/gf_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace treepat {

int PatternSet::total_leaves() const {
    int n = 0;
    for (const Tree& t : elems_) n += t.leaf_count();
    return n;
}

std::string PatternSet::key() const {
    std::string k;
    for (const Tree& t : elems_) {
        if (!k.empty()) k.push_back('|');
        k += render_tree(t);
    }
    return k;
}

PatternSet canonical_set(std::vector<Tree> trees, bool minimize) {
    if (trees.empty()) throw std::invalid_argument("canonical_set: empty pattern list");
    std::sort(trees.begin(), trees.end(), canonical_less);
    trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
    if (minimize) {
        std::vector<Tree> kept;
        for (const Tree& t : trees) {
            bool redundant = false;
            for (const Tree& s : trees) {
                if (s == t) continue;
                if (contains_noncontiguous(t, s)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(t);
        }
        trees = std::move(kept);
    }
    return PatternSet(std::move(trees));
}

RationalGF gf_single(const Tree& t) {
    if (t.is_leaf()) return RationalGF::zero();
    RationalGF gl = gf_single(t.left());
    RationalGF gr = gf_single(t.right());
    RationalGF one = RationalGF::constant(1);
    return (RationalGF::x() - gl * gr) / (one - gl - gr);
}

RationalGF gf_comb(int k) {
    if (k < 1) throw std::invalid_argument("gf_comb: need k >= 1");
    RationalGF g = RationalGF::zero();
    RationalGF one = RationalGF::constant(1);
    for (int i = 2; i <= k; ++i) g = RationalGF::x() / (one - g);
    return g;
}

RationalGF gf_closed_form(int k) {
    if (k < 1) throw std::invalid_argument("gf_closed_form: need k >= 1");
    Polynomial num, den;
    if (k >= 2) {
        std::vector<Int> nc(static_cast<size_t>((k - 2) / 2) + 2);
        for (int i = 0; i <= (k - 2) / 2; ++i) {
            Int term = binomial(k - (i + 2), i);
            nc[static_cast<size_t>(i + 1)] = (i % 2 == 0) ? term : -term;
        }
        num = Polynomial(std::move(nc));
    }
    std::vector<Int> dc(static_cast<size_t>((k - 1) / 2) + 1);
    for (int i = 0; i <= (k - 1) / 2; ++i) {
        Int term = binomial(k - (i + 1), i);
        dc[static_cast<size_t>(i)] = (i % 2 == 0) ? term : -term;
    }
    den = Polynomial(std::move(dc));
    return RationalGF(std::move(num), std::move(den));
}

RationalGF GfEngine::gf_set(std::vector<Tree> patterns) { return gf_set(canonical_set(std::move(patterns), minimize_)); }

RationalGF GfEngine::gf_set(const PatternSet& s) {
    if (s.size() == 0) throw std::invalid_argument("gf_set: empty set (the unconstrained GF is not rational)");
    // short-circuits: a Leaf pattern is contained in everything; only the
    // 1-leaf tree avoids the 2-leaf pattern
    for (const Tree& t : s.elements()) {
        if (t.is_leaf()) return RationalGF::zero();
        if (t.leaf_count() == 2) return RationalGF::x();
    }
    std::string key = s.key();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    RationalGF g = compute(s);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(std::move(key), std::move(g)).first->second;
}

RationalGF GfEngine::compute(const PatternSet& s) {
    const std::vector<Tree>& ts = s.elements();
    const int j = s.size();
    const int measure = s.total_leaves();

    auto recurse = [&](std::vector<Tree> sub) {
        PatternSet ps = canonical_set(std::move(sub), minimize_);
        // every call away from the two linear self-terms must shrink the set
        if (ps.total_leaves() >= measure)
            throw std::logic_error("gf_set recursion failed to decrease total leaf count");
        return gf_set(ps);
    };

    // linear self-terms: v = <1,...,1> contributes g_L * g_S and
    // v = <-1,...,-1> contributes g_S * g_R
    std::vector<Tree> lefts, rights;
    lefts.reserve(ts.size());
    rights.reserve(ts.size());
    for (const Tree& t : ts) {
        lefts.push_back(t.left());
        rights.push_back(t.right());
    }
    RationalGF g_left = recurse(lefts);
    RationalGF g_right = recurse(rights);

    // every other sign vector v in {-1,0,1}^j, with sign (-1)^(#zeros in v)
    RationalGF rest = RationalGF::zero();
    std::vector<int> v(static_cast<size_t>(j), -1);
    while (true) {
        bool all_plus = std::all_of(v.begin(), v.end(), [](int x) { return x == 1; });
        bool all_minus = std::all_of(v.begin(), v.end(), [](int x) { return x == -1; });
        if (!all_plus && !all_minus) {
            std::vector<Tree> sl, sr;
            int zeros = 0;
            for (int i = 0; i < j; ++i) {
                const Tree& t = ts[static_cast<size_t>(i)];
                switch (v[static_cast<size_t>(i)]) {
                    case -1:
                        sl.push_back(t);
                        sr.push_back(t.right());
                        break;
                    case 0:
                        sl.push_back(t.left());
                        sr.push_back(t.right());
                        ++zeros;
                        break;
                    default:
                        sl.push_back(t.left());
                        sr.push_back(t);
                }
            }
            RationalGF term = recurse(std::move(sl)) * recurse(std::move(sr));
            rest = (zeros % 2 == 0) ? rest + term : rest - term;
        }
        // next vector in {-1,0,1}^j
        int i = 0;
        while (i < j && v[static_cast<size_t>(i)] == 1) v[static_cast<size_t>(i++)] = -1;
        if (i == j) break;
        ++v[static_cast<size_t>(i)];
    }

    RationalGF one = RationalGF::constant(1);
    return (RationalGF::x() + rest) / (one - g_left - g_right);
}

}  // namespace treepat
