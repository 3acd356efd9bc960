#pragma once

#include "conscheck/exec.hpp"
#include "conscheck/model.hpp"

namespace conscheck {

/// All X such that X is a clique and V \ X independent in (V, edges),
/// in lexicographic vertex-list order. Uses the degree-sequence
/// characterization: with degrees sorted descending and
/// m = max{i : d_i >= i-1}, the graph has such a partition iff
/// sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and every valid X differs from
/// the top-m set by at most one vertex in each direction.
std::vector<std::vector<VertexId>> enumerate_splits(const EdgeSet& edges, int n);

/// With a positive sample: scan that sample's partitions for a consistent
/// one. All-negative: scan subsets by increasing bitmask value for one that
/// is a partition of no negative sample; terminates within (number of
/// partitions over all samples) + 1 steps.
Verdict solve_split(const Instance& instance, exec::Mode mode = exec::Mode::Parallel);

}  // namespace conscheck
