#pragma once

#include "conscheck/model.hpp"
#include "conscheck/solve_options.hpp"

namespace conscheck {

/// Consistency solver for size-k dominating sets under degree bound d.
/// A k-set dominates at most k(d+1) vertices, so with any positive sample
/// and n > k(d+1) the answer is NoSolution; all-negative instances beyond
/// that bound accept the first k vertices; otherwise n is parameter-bounded
/// and the k-subsets are scanned in lexicographic order.
Verdict solve_dominating_set(const Instance& instance, exec::Mode mode = exec::Mode::Parallel);

/// Guessed adjacency pattern of the solution vertices: k nodes, edges
/// labeled with the nonempty set of negative samples in which the
/// corresponding solution pair is adjacent. Patterns leaving some negative
/// sample unused are discarded (the solution must be non-independent in
/// every negative sample).
struct SolutionTemplate {
    int k = 0;
    std::vector<std::pair<int, int>> edges;  // lexicographic
    std::vector<std::uint32_t> labels;       // parallel to edges, nonempty
    bool has_edge(int a, int b) const;
    std::uint32_t label(int a, int b) const;  // 0 for non-edges
};

/// All templates over k nodes and t_minus negative samples, in a fixed
/// deterministic order.
std::vector<SolutionTemplate> enumerate_templates(int k, int t_minus);

/// Tuples of instance vertices realizing one connected component of a
/// template under the given coloring: node i may only map to vertices
/// colored i, tree edges of the component are walked through the adjacency
/// of the lowest labeled negative sample, and every vertex pair inside the
/// tuple must match the template's adjacency pattern exactly in all negative
/// samples and be non-adjacent in every positive sample.
/// comp_nodes must be sorted; tuples are listed in a deterministic order,
/// each tuple parallel to comp_nodes.
std::vector<std::vector<VertexId>> place_component(const SolutionTemplate& tmpl,
                                                   const std::vector<int>& comp_nodes,
                                                   const std::vector<int>& coloring,
                                                   const Instance& instance);

/// Threshold between exhaustively branched and greedily filled placement
/// lists: sum_{i=1}^{k} C(k*d*t*(d*t)^k, i), saturating.
std::uint64_t placement_threshold(int k, int d, int t);

/// Consistency solver for size-k independent sets under degree bound d,
/// parameterized by color coding over k colors and adjacency-pattern
/// templates. Components with few placements are branched exhaustively;
/// components with many are filled greedily, re-filtering against the
/// partial solution.
Verdict solve_independent_set(const Instance& instance, const SolveOptions& options = {});

}  // namespace conscheck
