#pragma once

// Shared test helpers: tiny brute-force references and seeded random
// generators for instances, solutions, and source problems.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "conscheck/model.hpp"
#include "conscheck/oracle.hpp"
#include "conscheck/reductions.hpp"

namespace testsupport {

using namespace conscheck;

inline EdgeSet es(std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Pair> v;
    v.reserve(pairs.size());
    for (auto [a, b] : pairs) v.emplace_back(a, b);
    return EdgeSet::from_pairs(std::move(v));
}

inline Instance make_instance(Problem problem, int n, std::vector<Sample> samples,
                              std::optional<int> k = std::nullopt,
                              std::optional<int> d = std::nullopt) {
    Instance inst;
    inst.problem = problem;
    inst.n = n;
    inst.k = k;
    inst.d = d;
    inst.samples = std::move(samples);
    inst.validate();
    return inst;
}

inline int rnd(std::mt19937_64& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline bool chance(std::mt19937_64& g, double p) {
    return std::bernoulli_distribution(p)(g);
}

// ---------------------------------------------------------------------------
// brute-force references
// ---------------------------------------------------------------------------

inline bool sat_brute(const CnfFormula& f) {
    for (std::uint32_t assign = 0; assign < (1u << f.num_vars); ++assign) {
        bool all = true;
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool val = (assign >> (std::abs(lit) - 1)) & 1u;
                if ((lit > 0) == val) sat = true;
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

// Some selection of at most k sets covers the universe.
inline bool cover_with_at_most(const SetCoverInstance& sc, int k) {
    const int m = static_cast<int>(sc.sets.size());
    const std::uint32_t full = (1u << sc.universe) - 1;
    std::vector<std::uint32_t> bits(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int e : sc.sets[static_cast<std::size_t>(i)]) bits[static_cast<std::size_t>(i)] |= 1u << (e - 1);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) > k) continue;
        std::uint32_t covered = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) covered |= bits[static_cast<std::size_t>(i)];
        if (covered == full) return true;
    }
    return false;
}

// Some selection of exactly k distinct sets covers the universe.
inline bool cover_with_exactly_distinct(const SetCoverInstance& sc, int k) {
    const int m = static_cast<int>(sc.sets.size());
    const std::uint32_t full = (1u << sc.universe) - 1;
    std::vector<std::uint32_t> bits(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int e : sc.sets[static_cast<std::size_t>(i)]) bits[static_cast<std::size_t>(i)] |= 1u << (e - 1);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::uint32_t covered = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) covered |= bits[static_cast<std::size_t>(i)];
        if (covered == full) return true;
    }
    return false;
}

inline bool has_independent_set(const EdgeSet& edges, int n, int k) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        bool ok = true;
        for (const Pair& e : edges.edges())
            if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

inline std::vector<VertexId> mask_to_vertices(std::uint32_t mask) {
    std::vector<VertexId> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// All clique/independent-set partitions, as sorted clique-side vertex lists in
// lexicographic list order (the order enumerate_splits promises).
inline std::vector<std::vector<VertexId>> brute_splits(const EdgeSet& edges, int n) {
    std::vector<std::vector<VertexId>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<VertexId> x = mask_to_vertices(mask);
        if (verify(Problem::SplitGraph, Solution::vset(x), edges, n)) out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// random structures
// ---------------------------------------------------------------------------

inline EdgeSet random_edges(std::mt19937_64& g, int n, double p) {
    std::vector<Pair> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (chance(g, p)) out.emplace_back(u, v);
    return EdgeSet::from_pairs(std::move(out));
}

// Random graph honoring max degree d; edge candidates visited in random order.
inline EdgeSet random_edges_deg(std::mt19937_64& g, int n, int d, double p) {
    std::vector<Pair> cand;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) cand.emplace_back(u, v);
    std::shuffle(cand.begin(), cand.end(), g);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<Pair> out;
    for (const Pair& e : cand) {
        if (deg[static_cast<std::size_t>(e.u)] >= d || deg[static_cast<std::size_t>(e.v)] >= d) continue;
        if (!chance(g, p)) continue;
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
        out.push_back(e);
    }
    return EdgeSet::from_pairs(std::move(out));
}

inline std::vector<VertexId> random_vertex_subset(std::mt19937_64& g, int n, double p) {
    std::vector<VertexId> out;
    for (int v = 0; v < n; ++v)
        if (chance(g, p)) out.push_back(v);
    return out;
}

inline std::vector<VertexId> random_k_subset(std::mt19937_64& g, int n, int k) {
    std::vector<VertexId> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    std::shuffle(all.begin(), all.end(), g);
    all.resize(static_cast<std::size_t>(k));
    std::sort(all.begin(), all.end());
    return all;
}

// A shape-valid random solution for the problem (ignores samples).
inline Solution random_solution(std::mt19937_64& g, Problem problem, int n, int k) {
    switch (problem) {
        case Problem::TwoColoring:
        case Problem::SplitGraph: return Solution::vset(random_vertex_subset(g, n, 0.5));
        case Problem::IndependentSetDeg:
        case Problem::DominatingSetDeg: return Solution::vset(random_k_subset(g, n, k));
        case Problem::Matching: {
            std::vector<VertexId> vs = random_k_subset(g, n, 2 * k);
            std::shuffle(vs.begin(), vs.end(), g);
            std::vector<Pair> f;
            for (int i = 0; i < k; ++i) f.emplace_back(vs[2 * static_cast<std::size_t>(i)], vs[2 * static_cast<std::size_t>(i) + 1]);
            return Solution::pset(std::move(f));
        }
        case Problem::Path: {
            std::vector<VertexId> vs = random_k_subset(g, n, k + 1);
            std::shuffle(vs.begin(), vs.end(), g);
            std::vector<Pair> f;
            for (int i = 0; i < k; ++i) f.emplace_back(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(i) + 1]);
            return Solution::pset(std::move(f));
        }
        case Problem::EdgeCliqueCover: {
            std::set<std::vector<VertexId>> members;
            while (static_cast<int>(members.size()) < k)
                members.insert(random_k_subset(g, n, rnd(g, 2, std::min(n, 4))));
            return Solution::cover({members.begin(), members.end()});
        }
    }
    throw std::logic_error("unreachable");
}

// An edge set the solution verifies on (label-1 sample), shape-valid for the
// instance frame. Returns nullopt when no such graph exists for this frame.
inline std::optional<EdgeSet> planted_positive(std::mt19937_64& g, Problem problem,
                                               const Solution& sol, int n, int k, int d) {
    switch (problem) {
        case Problem::TwoColoring: {
            std::vector<char> in_x(static_cast<std::size_t>(n), 0);
            for (VertexId v : sol.vertices()) in_x[static_cast<std::size_t>(v)] = 1;
            std::vector<Pair> out;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (in_x[static_cast<std::size_t>(u)] != in_x[static_cast<std::size_t>(v)] && chance(g, 0.5))
                        out.emplace_back(u, v);
            return EdgeSet::from_pairs(std::move(out));
        }
        case Problem::SplitGraph: {
            std::vector<char> in_x(static_cast<std::size_t>(n), 0);
            for (VertexId v : sol.vertices()) in_x[static_cast<std::size_t>(v)] = 1;
            std::vector<Pair> out;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    bool both = in_x[static_cast<std::size_t>(u)] && in_x[static_cast<std::size_t>(v)];
                    bool neither = !in_x[static_cast<std::size_t>(u)] && !in_x[static_cast<std::size_t>(v)];
                    if (both || (!neither && chance(g, 0.4))) out.emplace_back(u, v);
                }
            return EdgeSet::from_pairs(std::move(out));
        }
        case Problem::Matching:
        case Problem::Path: {
            std::set<Pair> have(sol.pairs().begin(), sol.pairs().end());
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!have.contains(Pair(u, v)) && chance(g, 0.3)) have.insert(Pair(u, v));
            return EdgeSet::from_pairs({have.begin(), have.end()});
        }
        case Problem::EdgeCliqueCover: {
            std::set<Pair> un;
            for (const auto& member : sol.members())
                for (const Pair& p : cover_member_pairs(member)) un.insert(p);
            return EdgeSet::from_pairs({un.begin(), un.end()});
        }
        case Problem::IndependentSetDeg: {
            std::vector<char> in_x(static_cast<std::size_t>(n), 0);
            for (VertexId v : sol.vertices()) in_x[static_cast<std::size_t>(v)] = 1;
            std::vector<Pair> cand;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!(in_x[static_cast<std::size_t>(u)] && in_x[static_cast<std::size_t>(v)]))
                        cand.emplace_back(u, v);
            std::shuffle(cand.begin(), cand.end(), g);
            std::vector<int> deg(static_cast<std::size_t>(n), 0);
            std::vector<Pair> out;
            for (const Pair& e : cand) {
                if (deg[static_cast<std::size_t>(e.u)] >= d || deg[static_cast<std::size_t>(e.v)] >= d) continue;
                if (!chance(g, 0.4)) continue;
                ++deg[static_cast<std::size_t>(e.u)];
                ++deg[static_cast<std::size_t>(e.v)];
                out.push_back(e);
            }
            return EdgeSet::from_pairs(std::move(out));
        }
        case Problem::DominatingSetDeg: {
            const auto& x = sol.vertices();
            if (static_cast<int>(x.size()) == n) return EdgeSet{};  // X = V dominates the empty graph
            if (d == 0) return std::nullopt;  // a proper subset cannot dominate without edges
            std::vector<char> in_x(static_cast<std::size_t>(n), 0);
            for (VertexId v : x) in_x[static_cast<std::size_t>(v)] = 1;
            std::vector<int> deg(static_cast<std::size_t>(n), 0);
            std::vector<Pair> out;
            std::size_t turn = 0;
            for (int v = 0; v < n; ++v) {
                if (in_x[static_cast<std::size_t>(v)]) continue;
                bool placed = false;
                for (std::size_t step = 0; step < x.size() && !placed; ++step) {
                    VertexId xm = x[(turn + step) % x.size()];
                    if (deg[static_cast<std::size_t>(xm)] < d) {
                        out.emplace_back(std::min(xm, v), std::max(xm, v));
                        ++deg[static_cast<std::size_t>(xm)];
                        ++deg[static_cast<std::size_t>(v)];
                        placed = true;
                        turn = (turn + step + 1) % x.size();
                    }
                }
                if (!placed) return std::nullopt;  // degree budget of X exhausted
            }
            // random extras within the degree budget never break domination
            std::vector<Pair> cand;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) cand.emplace_back(u, v);
            std::shuffle(cand.begin(), cand.end(), g);
            std::set<Pair> have(out.begin(), out.end());
            for (const Pair& e : cand) {
                if (have.contains(e)) continue;
                if (deg[static_cast<std::size_t>(e.u)] >= d || deg[static_cast<std::size_t>(e.v)] >= d) continue;
                if (!chance(g, 0.25)) continue;
                ++deg[static_cast<std::size_t>(e.u)];
                ++deg[static_cast<std::size_t>(e.v)];
                have.insert(e);
            }
            return EdgeSet::from_pairs({have.begin(), have.end()});
        }
    }
    throw std::logic_error("unreachable");
}

// A shape-valid random graph for the frame (degree-bounded when d applies).
inline EdgeSet random_sample_graph(std::mt19937_64& g, Problem problem, int n, int d) {
    if (problem_has_d(problem)) return random_edges_deg(g, n, d, 0.5);
    return random_edges(g, n, 0.45);
}

// A random instance within the acceptance-scale bounds (n <= 8, t <= 4,
// t- <= 2, k <= 3, d <= 2). Planted instances embed a hidden solution, so
// they are solvable; unplanted ones are unconstrained.
inline Instance random_instance(std::mt19937_64& g, Problem problem, bool planted) {
    Instance inst;
    inst.problem = problem;
    int k = 0, d = 0;
    switch (problem) {
        case Problem::TwoColoring:
        case Problem::SplitGraph: inst.n = rnd(g, 1, 8); break;
        case Problem::Matching:
            inst.n = rnd(g, 2, 8);
            k = rnd(g, 0, std::min(3, inst.n / 2));
            break;
        case Problem::Path:
            inst.n = rnd(g, 2, 8);
            k = rnd(g, 0, std::min(3, inst.n - 1));
            break;
        case Problem::EdgeCliqueCover:
            k = rnd(g, 0, 3);
            // n >= 3 once k >= 2 so k distinct members exist; n <= 6 for k = 3
            // keeps the oracle candidate pool small
            inst.n = rnd(g, k >= 2 ? 3 : 2, k == 3 ? 6 : 8);
            break;
        case Problem::IndependentSetDeg:
        case Problem::DominatingSetDeg:
            inst.n = rnd(g, 1, 8);
            k = rnd(g, 0, std::min(3, inst.n));
            d = rnd(g, 0, 2);
            break;
    }
    if (problem_has_k(problem)) inst.k = k;
    if (problem_has_d(problem)) inst.d = d;

    const int t = rnd(g, 1, 4);
    int tneg = rnd(g, 0, std::min(2, t));

    if (!planted) {
        std::vector<int> labels(static_cast<std::size_t>(t), 1);
        for (int i = 0; i < tneg; ++i) labels[static_cast<std::size_t>(i)] = 0;
        std::shuffle(labels.begin(), labels.end(), g);
        for (int i = 0; i < t; ++i)
            inst.samples.push_back({random_sample_graph(g, problem, inst.n, d), labels[static_cast<std::size_t>(i)]});
        inst.validate();
        return inst;
    }

    Solution sol = random_solution(g, problem, inst.n, k);
    std::vector<Sample> samples;
    int negatives_left = tneg;
    for (int i = 0; i < t; ++i) {
        bool want_negative = negatives_left > 0 && (t - i <= negatives_left || chance(g, 0.5));
        if (want_negative) {
            // rejection-sample a graph the solution violates; fall back to a
            // positive when the frame admits no violating graph
            bool made = false;
            for (int attempt = 0; attempt < 40 && !made; ++attempt) {
                EdgeSet e = random_sample_graph(g, problem, inst.n, d);
                if (!verify(problem, sol, e, inst.n, inst.k, inst.d)) {
                    samples.push_back({std::move(e), 0});
                    --negatives_left;
                    made = true;
                }
            }
            if (made) continue;
        }
        auto pos = planted_positive(g, problem, sol, inst.n, k, d);
        if (pos) {
            samples.push_back({std::move(*pos), 1});
        } else {
            // the frame admits no verifying graph for this solution; use an
            // arbitrary violated graph instead (stays consistent with sol)
            EdgeSet e = random_sample_graph(g, problem, inst.n, d);
            const int label = verify(problem, sol, e, inst.n, inst.k, inst.d) ? 1 : 0;
            samples.push_back({std::move(e), label});
        }
    }
    std::shuffle(samples.begin(), samples.end(), g);
    inst.samples = std::move(samples);
    inst.validate();
    return inst;
}

// Solver/oracle verdicts agree, and any found solution is consistent.
inline bool agrees_with_oracle(const Instance& inst, const Verdict& got,
                               std::uint64_t budget = kDefaultOracleBudget) {
    Verdict want = oracle_solve(inst, budget);
    if (got.is_found() != want.is_found()) return false;
    if (got.is_found() && !is_consistent(inst, *got.solution)) return false;
    return true;
}

// Random source problems for reduction round-trips.
inline SetCoverInstance random_set_cover(std::mt19937_64& g, int max_universe, int max_sets,
                                         int max_k) {
    SetCoverInstance sc;
    sc.universe = rnd(g, 1, max_universe);
    const int m = rnd(g, 1, max_sets);
    for (int i = 0; i < m; ++i) {
        std::vector<int> s;
        for (int e = 1; e <= sc.universe; ++e)
            if (chance(g, 0.5)) s.push_back(e);
        if (s.empty()) s.push_back(rnd(g, 1, sc.universe));
        sc.sets.push_back(std::move(s));
    }
    sc.k = rnd(g, 1, max_k);
    return sc;
}

inline CnfFormula random_cnf(std::mt19937_64& g, int min_vars, int max_vars, int max_clauses) {
    CnfFormula f;
    f.num_vars = rnd(g, min_vars, max_vars);
    const int c = rnd(g, 1, max_clauses);
    for (int i = 0; i < c; ++i) {
        std::set<int> lits;
        const int len = rnd(g, 1, std::min(3, 2 * f.num_vars));
        while (static_cast<int>(lits.size()) < len) {
            int var = rnd(g, 1, f.num_vars);
            lits.insert(chance(g, 0.5) ? var : -var);
        }
        f.clauses.emplace_back(lits.begin(), lits.end());
    }
    return f;
}

}  // namespace testsupport
