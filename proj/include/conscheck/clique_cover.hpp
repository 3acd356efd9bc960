#pragma once

#include "conscheck/model.hpp"

namespace conscheck {

/// A set of at most `budget` distinct cliques (vertex sets, size >= 2) of
/// (V, edges) whose pair sets union to exactly the edge set, or nullopt.
/// Kernelizes first: isolated vertices are dropped, and a true twin whose
/// companion keeps another neighbor is removed and re-inserted into its
/// companion's cliques afterwards. Twin pairs forming a bare edge are left
/// for the branching, which covers one uncovered edge per step with a
/// maximal clique. A kernel beyond 2*budget + 2^budget non-isolated
/// vertices cannot have such a cover.
std::optional<std::vector<std::vector<VertexId>>> cover_edges_exactly(const EdgeSet& edges, int n,
                                                                      int budget);

/// Consistency solver for exact-size edge clique covers. Distinct positive
/// samples can never share a cover (the member pair sets union to the whole
/// edge set, which pins it down), so two distinct positives or a negative
/// equal to the positive force NoSolution; otherwise a cover of the positive
/// is searched and padded with further distinct cliques up to k members.
/// All-negative instances scan star families {{0,a} : a in A} — a negative
/// sample rules out at most one A — falling back to full enumeration on
/// tiny vertex sets.
Verdict solve_clique_cover(const Instance& instance);

}  // namespace conscheck
