#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace conscheck {

/// Vertex index in [0, n) of the owning instance.
using VertexId = int;

/// Unordered vertex pair, stored canonically with u < v.
struct Pair {
    VertexId u = 0;
    VertexId v = 0;

    Pair() = default;
    Pair(VertexId a, VertexId b);

    friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Sorted, duplicate-free set of vertex pairs over a fixed vertex range.
class EdgeSet {
  public:
    EdgeSet() = default;

    /// Sorts the pairs; throws std::invalid_argument on duplicates.
    static EdgeSet from_pairs(std::vector<Pair> pairs);

    const std::vector<Pair>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    bool contains(Pair p) const;
    int max_vertex() const;  // -1 when empty
    int max_degree(int n) const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
    friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

  private:
    std::vector<Pair> edges_;
};

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_intersection(const EdgeSet& a, const EdgeSet& b);

struct Sample {
    EdgeSet edges;
    int label = 0;  // 1 = positive, 0 = negative

    friend bool operator==(const Sample&, const Sample&) = default;
};

enum class Problem {
    TwoColoring,
    SplitGraph,
    Matching,
    Path,
    EdgeCliqueCover,
    IndependentSetDeg,
    DominatingSetDeg,
};

std::string problem_name(Problem p);
std::optional<Problem> problem_from_name(const std::string& name);

/// True for the five problems carrying a solution-size parameter k.
bool problem_has_k(Problem p);
/// True for the degree-bounded problems carrying d.
bool problem_has_d(Problem p);

/// A consistency-checking instance: one vertex set, many labeled edge sets.
struct Instance {
    Problem problem = Problem::TwoColoring;
    int n = 0;
    std::optional<int> k;
    std::optional<int> d;
    std::vector<Sample> samples;

    int num_negative() const;
    int num_positive() const;

    /// Checks all structural invariants (k/d presence, edge ranges, degree
    /// bounds). Throws std::invalid_argument naming the violation.
    void validate() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Solution payloads. VSet and PSet are kept sorted; Cover members are
/// sorted vertex sets of size >= 2, ordered lexicographically.
struct VSet {
    std::vector<VertexId> vertices;
    friend auto operator<=>(const VSet&, const VSet&) = default;
};
struct PSet {
    std::vector<Pair> pairs;
    friend auto operator<=>(const PSet&, const PSet&) = default;
};
struct Cover {
    std::vector<std::vector<VertexId>> members;
    friend auto operator<=>(const Cover&, const Cover&) = default;
};

class Solution {
  public:
    static Solution vset(std::vector<VertexId> vertices);
    static Solution pset(std::vector<Pair> pairs);
    static Solution cover(std::vector<std::vector<VertexId>> members);

    bool is_vset() const { return std::holds_alternative<VSet>(data_); }
    bool is_pset() const { return std::holds_alternative<PSet>(data_); }
    bool is_cover() const { return std::holds_alternative<Cover>(data_); }

    const std::vector<VertexId>& vertices() const { return std::get<VSet>(data_).vertices; }
    const std::vector<Pair>& pairs() const { return std::get<PSet>(data_).pairs; }
    const std::vector<std::vector<VertexId>>& members() const { return std::get<Cover>(data_).members; }

    friend bool operator==(const Solution&, const Solution&) = default;

  private:
    std::variant<VSet, PSet, Cover> data_;
};

/// Solver outcome: a solution, or a proven "no consistent solution exists".
struct Verdict {
    std::optional<Solution> solution;

    static Verdict found(Solution s) { return Verdict{std::move(s)}; }
    static Verdict no_solution() { return Verdict{}; }
    bool is_found() const { return solution.has_value(); }
};

/// The per-problem verification predicate on a single sample graph.
///
/// Semantics:
///  - TwoColoring: every edge has exactly one endpoint in X.
///  - SplitGraph: X is a clique, V \ X is independent.
///  - Matching: F is vertex-disjoint, F is a subset of the edges, |F| = k.
///  - Path: F is a subset of the edges, |F| = k, and F is exactly the edge
///    set of a simple path on k+1 vertices (k = 0 means a single vertex).
///  - EdgeCliqueCover: exactly k members, each a clique in the graph, and
///    the union of each member's full pair set equals the edge set.
///  - IndependentSetDeg: |X| = k and no edge inside X.
///  - DominatingSetDeg: |X| = k and every vertex is in X or adjacent to X.
///
/// Throws std::invalid_argument on a solution shape that does not match the
/// problem, or when a required parameter is missing.
bool verify(Problem problem, const Solution& solution, const EdgeSet& sample_edges, int n,
            std::optional<int> k = std::nullopt, std::optional<int> d = std::nullopt);

/// True iff verify(...) == label for every sample of the instance.
bool is_consistent(const Instance& instance, const Solution& solution);

/// Interprets an edge-set-valued cover member as a vertex set: valid iff the
/// pairs are exactly all pairs over their endpoints. Returns the endpoint set.
std::optional<std::vector<VertexId>> cover_member_from_edges(const std::vector<Pair>& pairs);

/// The full pair set of a cover member.
std::vector<Pair> cover_member_pairs(const std::vector<VertexId>& member);

}  // namespace conscheck
