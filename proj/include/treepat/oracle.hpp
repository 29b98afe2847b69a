#pragma once

#include "treepat/gf_engine.hpp"
#include "treepat/matcher.hpp"
#include "treepat/tree.hpp"

#include <cstdint>
#include <vector>

namespace treepat {

/// Ground-truth avoidance counts by exhaustive enumeration and matching.
/// count_avoiders partitions the host sweep across OpenMP threads;
/// count_avoiders_serial is the plain-loop reference used to validate it.
/// Both are deterministic and return |{T with n leaves : T avoids S}|.
std::uint64_t count_avoiders(int n, const PatternSet& s, ContainMode mode);
std::uint64_t count_avoiders_serial(int n, const PatternSet& s, ContainMode mode);

/// Element n-1 holds count_avoiders(n, s, mode) for n = 1..nmax.
std::vector<std::uint64_t> sequence_brute(int nmax, const PatternSet& s, ContainMode mode);

}  // namespace treepat
