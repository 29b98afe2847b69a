// Compares the OpenMP sweeps against their serial reference implementations
// on the workloads the test suites lean on hardest.

#include "treepat/gf_engine.hpp"
#include "treepat/oracle.hpp"
#include "treepat/permbridge.hpp"
#include "treepat/tree.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace treepat;

namespace {

double time_ms(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-42s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif

    enumerate_trees(13);  // warm the enumeration cache outside the timings

    {
        PatternSet s = canonical_set({comb(5, Side::left)});
        std::uint64_t a = 0, b = 0;
        double ts = time_ms([&] { a = count_avoiders_serial(13, s, ContainMode::noncontiguous); });
        double tp = time_ms([&] { b = count_avoiders(13, s, ContainMode::noncontiguous); });
        report("count_avoiders n=13, 5-leaf comb", ts, tp);
        if (a != b) std::printf("MISMATCH: %llu vs %llu\n", (unsigned long long)a, (unsigned long long)b);
    }

    {
        PatternSet s = canonical_set({parse_tree("((L L) (L L))"), parse_tree("((L (L L)) L)")});
        std::uint64_t a = 0, b = 0;
        double ts = time_ms([&] { a = count_avoiders_serial(13, s, ContainMode::noncontiguous); });
        double tp = time_ms([&] { b = count_avoiders(13, s, ContainMode::noncontiguous); });
        report("count_avoiders n=13, pair of 4-leaf trees", ts, tp);
        if (a != b) std::printf("MISMATCH: %llu vs %llu\n", (unsigned long long)a, (unsigned long long)b);
    }

    {
        std::vector<Permutation> q{parse_perm("231"), parse_perm("4321")};
        std::uint64_t a = 0, b = 0;
        double ts = time_ms([&] { a = count_avoiding_perms_serial(11, q); });
        double tp = time_ms([&] { b = count_avoiding_perms(11, q); });
        report("count_avoiding_perms n=11, {231,4321}", ts, tp);
        if (a != b) std::printf("MISMATCH: %llu vs %llu\n", (unsigned long long)a, (unsigned long long)b);
    }

    return 0;
}
