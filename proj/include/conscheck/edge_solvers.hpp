#pragma once

#include "conscheck/model.hpp"
#include "conscheck/solve_options.hpp"

namespace conscheck {

/// Intersection of all positive samples' edge sets. Any pair set that is a
/// sub-structure of every positive sample lives inside it. Throws
/// std::logic_error when the instance has no positive sample.
EdgeSet intersect_positives(const Instance& instance);

/// Color-coding inner step for matchings: given a coloring with 2k colors,
/// finds k edges whose endpoints carry 2k distinct colors, such that for
/// every negative sample at least one chosen edge is absent from it.
/// States (C, I) = (used colors, negatives dealt with) are expanded level by
/// level (|C| increasing); equivalent edges are collapsed per
/// (color pair, absence pattern) class. Returns the edges sorted, or nullopt.
std::optional<std::vector<Pair>> dp_matching(const EdgeSet& edges,
                                             const std::vector<EdgeSet>& negatives, int k,
                                             const std::vector<int>& coloring);

/// Color-coding inner step for paths: k+1 colors, states (v, C, I) for a
/// path ending at v over color set C dealing with negatives I. Returns the
/// k path edges sorted, or nullopt.
std::optional<std::vector<Pair>> dp_path(const EdgeSet& edges, const std::vector<EdgeSet>& negatives,
                                         int k, const std::vector<int>& coloring);

/// Consistency solver for k-edge matchings. With positive samples, runs
/// dp_matching on the intersection over a coloring family; all-negative
/// instances are answered constructively (a pair bundle sharing vertex 0 is
/// a matching nowhere).
Verdict solve_matching(const Instance& instance, const SolveOptions& options = {});

/// Consistency solver for k-edge paths. With positive samples, runs dp_path
/// on the intersection; all-negative instances are answered constructively
/// (a claw at vertex 0, two disjoint pairs, or small-case enumeration).
Verdict solve_path(const Instance& instance, const SolveOptions& options = {});

}  // namespace conscheck
