#include "treepat/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace treepat {

std::vector<WilfClass> wilf_classify(GfEngine& engine, const std::vector<PatternSet>& sets, int prefix_len) {
    if (sets.empty()) throw std::invalid_argument("wilf_classify: no pattern sets");
    if (prefix_len < 1) throw std::invalid_argument("wilf_classify: need prefix_len >= 1");
    std::vector<WilfClass> classes;
    std::map<std::string, size_t> by_gf;  // keyed on the normal form's printout
    for (const PatternSet& s : sets) {
        RationalGF g = engine.gf_set(s);
        std::string key = g.str();
        auto it = by_gf.find(key);
        if (it == by_gf.end()) {
            WilfClass c;
            c.gf = g;
            auto coeffs = g.series(prefix_len);
            c.sequence_prefix.assign(coeffs.begin() + 1, coeffs.end());
            c.members.push_back(s);
            by_gf.emplace(std::move(key), classes.size());
            classes.push_back(std::move(c));
        } else {
            classes[it->second].members.push_back(s);
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const WilfClass& a, const WilfClass& b) { return a.sequence_prefix < b.sequence_prefix; });
    return classes;
}

std::vector<PatternSet> incomparable_pairs(int k1, int k2) {
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("incomparable_pairs: leaf counts must be positive");
    if (k1 > k2) std::swap(k1, k2);
    auto small = enumerate_trees(k1);
    auto large = enumerate_trees(k2);
    std::vector<PatternSet> out;
    std::set<std::string> seen;
    for (size_t i = 0; i < small.size(); ++i) {
        size_t jstart = (k1 == k2) ? i + 1 : 0;
        for (size_t j = jstart; j < large.size(); ++j) {
            const Tree& s = small[i];
            const Tree& t = large[j];
            // equal leaf counts: distinct trees are automatically incomparable
            if (k1 < k2 && contains_noncontiguous(t, s)) continue;
            PatternSet pair = canonical_set({s, t}, /*minimize=*/false);
            PatternSet mirrored = canonical_set({reflect(s), reflect(t)}, /*minimize=*/false);
            std::string key = std::min(pair.key(), mirrored.key());
            if (seen.insert(std::move(key)).second) out.push_back(std::move(pair));
        }
    }
    return out;
}

}  // namespace treepat
