#include "treepat/oracle.hpp"

#include <stdexcept>

namespace treepat {

std::uint64_t count_avoiders_serial(int n, const PatternSet& s, ContainMode mode) {
    if (n < 1) throw std::invalid_argument("count_avoiders: need n >= 1");
    if (s.size() == 0) throw std::invalid_argument("count_avoiders: empty pattern set");
    std::uint64_t count = 0;
    for (const Tree& host : detail::enumerate_trees_ref(n))
        if (avoids_all(host, s.elements(), mode)) ++count;
    return count;
}

std::uint64_t count_avoiders(int n, const PatternSet& s, ContainMode mode) {
    if (n < 1) throw std::invalid_argument("count_avoiders: need n >= 1");
    if (s.size() == 0) throw std::invalid_argument("count_avoiders: empty pattern set");
    const std::vector<Tree>& hosts = detail::enumerate_trees_ref(n);
    const auto total = static_cast<long long>(hosts.size());
    std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(dynamic, 256)
    for (long long i = 0; i < total; ++i)
        if (avoids_all(hosts[static_cast<size_t>(i)], s.elements(), mode)) ++count;
    return count;
}

std::vector<std::uint64_t> sequence_brute(int nmax, const PatternSet& s, ContainMode mode) {
    if (nmax < 1) throw std::invalid_argument("sequence_brute: need nmax >= 1");
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<size_t>(nmax));
    for (int n = 1; n <= nmax; ++n) out.push_back(count_avoiders(n, s, mode));
    return out;
}

}  // namespace treepat
