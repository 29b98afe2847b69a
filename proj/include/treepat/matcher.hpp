#pragma once

#include "treepat/tree.hpp"

#include <vector>

namespace treepat {

enum class ContainMode { contiguous, noncontiguous };

/// True iff host contains pattern after some sequence of edge contractions;
/// equivalently, via a side-preserving embedding of pattern vertices into
/// host vertices. Every tree contains the 1-leaf pattern.
bool contains_noncontiguous(const Tree& host, const Tree& pattern);

/// True iff some host vertex roots an exact contiguous copy of pattern:
/// pattern-internal vertices align with host-internal vertices on both child
/// edges; pattern leaves may sit atop internal host vertices.
bool contains_contiguous(const Tree& host, const Tree& pattern);

bool contains(const Tree& host, const Tree& pattern, ContainMode mode);

/// True iff host contains no element of patterns in the given mode.
/// Throws std::invalid_argument on an empty pattern set.
bool avoids_all(const Tree& host, const std::vector<Tree>& patterns, ContainMode mode);

}  // namespace treepat
