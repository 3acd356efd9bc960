#include "conscheck/edge_solvers.hpp"

#include <algorithm>
#include <unordered_map>

#include "conscheck/numeric.hpp"

namespace conscheck {

EdgeSet intersect_positives(const Instance& instance) {
    const EdgeSet* acc = nullptr;
    EdgeSet result;
    bool first = true;
    for (const Sample& s : instance.samples) {
        if (s.label != 1) continue;
        if (first) {
            result = s.edges;
            first = false;
        } else {
            result = edge_intersection(result, s.edges);
        }
        acc = &result;
    }
    if (!acc) throw std::logic_error("intersect_positives: no positive sample");
    return result;
}

namespace {

// Bit i set iff the edge is absent from negatives[i].
std::vector<std::uint32_t> absence_masks(const EdgeSet& edges, const std::vector<EdgeSet>& negatives) {
    std::vector<std::uint32_t> beta(edges.size(), 0);
    for (std::size_t j = 0; j < edges.size(); ++j)
        for (std::size_t i = 0; i < negatives.size(); ++i)
            if (!negatives[i].contains(edges.edges()[j])) beta[j] |= (1u << i);
    return beta;
}

struct Parent {
    std::uint64_t prev_key = 0;
    int edge_idx = -1;
};

using Level = std::unordered_map<std::uint64_t, Parent>;

std::vector<std::uint64_t> sorted_keys(const Level& level) {
    std::vector<std::uint64_t> keys;
    keys.reserve(level.size());
    for (const auto& [key, parent] : level) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

std::optional<std::vector<Pair>> dp_matching(const EdgeSet& edges,
                                             const std::vector<EdgeSet>& negatives, int k,
                                             const std::vector<int>& coloring) {
    const int tneg = static_cast<int>(negatives.size());
    if (tneg > 31) throw std::invalid_argument("dp_matching: too many negative samples");
    if (k < 0) throw std::invalid_argument("dp_matching: k must be >= 0");
    if (k == 0)
        return tneg == 0 ? std::optional<std::vector<Pair>>(std::in_place) : std::nullopt;
    if (2 * k + tneg > 62) throw std::invalid_argument("dp_matching: state space too wide");

    const std::uint32_t full_i = tneg == 0 ? 0 : (1u << tneg) - 1;
    std::vector<std::uint32_t> beta = absence_masks(edges, negatives);

    // one representative edge per (unordered color pair, absence pattern)
    struct EdgeClass {
        std::uint64_t color_mask;
        std::uint32_t beta;
        int edge_idx;
    };
    std::vector<EdgeClass> classes;
    std::unordered_map<std::uint64_t, char> seen_class;
    for (std::size_t j = 0; j < edges.size(); ++j) {
        const Pair& e = edges.edges()[j];
        int a = coloring[static_cast<std::size_t>(e.u)];
        int b = coloring[static_cast<std::size_t>(e.v)];
        if (a == b) continue;
        if (a < 0 || b < 0 || a >= 2 * k || b >= 2 * k)
            throw std::invalid_argument("dp_matching: coloring value out of range");
        if (a > b) std::swap(a, b);
        std::uint64_t class_key =
            (static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(2 * k) + static_cast<std::uint64_t>(b))
                << 32 |
            beta[j];
        if (seen_class.emplace(class_key, 1).second)
            classes.push_back({(std::uint64_t{1} << a) | (std::uint64_t{1} << b), beta[j],
                               static_cast<int>(j)});
    }

    std::vector<Level> levels(static_cast<std::size_t>(k) + 1);
    levels[0].emplace(0, Parent{});
    for (int step = 1; step <= k; ++step) {
        const Level& cur = levels[static_cast<std::size_t>(step - 1)];
        Level& next = levels[static_cast<std::size_t>(step)];
        for (std::uint64_t key : sorted_keys(cur)) {
            std::uint64_t c_mask = key >> tneg;
            std::uint32_t i_mask = static_cast<std::uint32_t>(key & full_i);
            for (const EdgeClass& ec : classes) {
                if (c_mask & ec.color_mask) continue;
                std::uint64_t nkey = ((c_mask | ec.color_mask) << tneg) |
                                     static_cast<std::uint64_t>(i_mask | ec.beta);
                next.emplace(nkey, Parent{key, ec.edge_idx});
            }
        }
    }

    std::uint64_t goal = ((std::uint64_t{1} << (2 * k)) - 1) << tneg | full_i;
    auto it = levels[static_cast<std::size_t>(k)].find(goal);
    if (it == levels[static_cast<std::size_t>(k)].end()) return std::nullopt;

    std::vector<Pair> out;
    std::uint64_t key = goal;
    for (int step = k; step >= 1; --step) {
        const Parent& p = levels[static_cast<std::size_t>(step)].at(key);
        out.push_back(edges.edges()[static_cast<std::size_t>(p.edge_idx)]);
        key = p.prev_key;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<Pair>> dp_path(const EdgeSet& edges, const std::vector<EdgeSet>& negatives,
                                         int k, const std::vector<int>& coloring) {
    const int tneg = static_cast<int>(negatives.size());
    if (tneg > 31) throw std::invalid_argument("dp_path: too many negative samples");
    if (k < 0) throw std::invalid_argument("dp_path: k must be >= 0");
    if (k == 0)
        return tneg == 0 ? std::optional<std::vector<Pair>>(std::in_place) : std::nullopt;

    const int colors = k + 1;
    int n = 0;
    for (const Pair& e : edges.edges()) n = std::max(n, e.v + 1);
    n = std::max(n, static_cast<int>(coloring.size()));
    int vbits = 1;
    while ((1 << vbits) < n) ++vbits;
    if (vbits + colors + tneg > 62) throw std::invalid_argument("dp_path: state space too wide");

    const std::uint32_t full_i = tneg == 0 ? 0 : (1u << tneg) - 1;
    std::vector<std::uint32_t> beta = absence_masks(edges, negatives);

    std::vector<std::vector<std::pair<VertexId, int>>> adj(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < edges.size(); ++j) {
        const Pair& e = edges.edges()[j];
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, static_cast<int>(j));
        adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, static_cast<int>(j));
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    auto color_of = [&](VertexId v) {
        int c = v < static_cast<int>(coloring.size()) ? coloring[static_cast<std::size_t>(v)] : -1;
        if (c < 0 || c >= colors) throw std::invalid_argument("dp_path: coloring value out of range");
        return c;
    };
    auto make_key = [&](VertexId v, std::uint64_t c_mask, std::uint32_t i_mask) {
        return ((static_cast<std::uint64_t>(v) << colors | c_mask) << tneg) |
               static_cast<std::uint64_t>(i_mask);
    };

    std::vector<Level> levels(static_cast<std::size_t>(k) + 1);
    for (VertexId v = 0; v < n; ++v)
        if (!adj[static_cast<std::size_t>(v)].empty())
            levels[0].emplace(make_key(v, std::uint64_t{1} << color_of(v), 0), Parent{});
    for (int step = 1; step <= k; ++step) {
        const Level& cur = levels[static_cast<std::size_t>(step - 1)];
        Level& next = levels[static_cast<std::size_t>(step)];
        for (std::uint64_t key : sorted_keys(cur)) {
            std::uint32_t i_mask = static_cast<std::uint32_t>(key & full_i);
            std::uint64_t c_mask = (key >> tneg) & ((std::uint64_t{1} << colors) - 1);
            VertexId v = static_cast<VertexId>(key >> (tneg + colors));
            for (const auto& [w, edge_idx] : adj[static_cast<std::size_t>(v)]) {
                int cw = color_of(w);
                if (c_mask & (std::uint64_t{1} << cw)) continue;
                std::uint64_t nkey = make_key(w, c_mask | (std::uint64_t{1} << cw),
                                              i_mask | beta[static_cast<std::size_t>(edge_idx)]);
                next.emplace(nkey, Parent{key, edge_idx});
            }
        }
    }

    // accept any end vertex once all k+1 colors are used and all negatives dealt
    const Level& last = levels[static_cast<std::size_t>(k)];
    std::uint64_t goal_key = 0;
    bool found = false;
    for (std::uint64_t key : sorted_keys(last)) {
        std::uint64_t c_mask = (key >> tneg) & ((std::uint64_t{1} << colors) - 1);
        if (c_mask == (std::uint64_t{1} << colors) - 1 && (key & full_i) == full_i) {
            goal_key = key;
            found = true;
            break;
        }
    }
    if (!found) return std::nullopt;

    std::vector<Pair> out;
    std::uint64_t key = goal_key;
    for (int step = k; step >= 1; --step) {
        const Parent& p = levels[static_cast<std::size_t>(step)].at(key);
        out.push_back(edges.edges()[static_cast<std::size_t>(p.edge_idx)]);
        key = p.prev_key;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<EdgeSet> negative_edge_sets(const Instance& instance) {
    std::vector<EdgeSet> out;
    for (const Sample& s : instance.samples)
        if (s.label == 0) out.push_back(s.edges);
    return out;
}

bool has_positive(const Instance& instance) {
    for (const Sample& s : instance.samples)
        if (s.label == 1) return true;
    return false;
}

std::uint64_t pair_count(int n) {
    return static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 2;
}

// k lexicographically-smallest pairs, skipping any already taken.
std::vector<Pair> fill_pairs(std::vector<Pair> taken, int n, int k) {
    std::vector<Pair> have = taken;
    std::sort(have.begin(), have.end());
    for (int u = 0; u < n && static_cast<int>(taken.size()) < k; ++u)
        for (int v = u + 1; v < n && static_cast<int>(taken.size()) < k; ++v) {
            Pair p(u, v);
            if (!std::binary_search(have.begin(), have.end(), p)) taken.push_back(p);
        }
    return taken;
}

Verdict checked_found(const Instance& instance, Solution s) {
    if (!is_consistent(instance, s)) return Verdict::no_solution();
    return Verdict::found(std::move(s));
}

// With only negative samples a candidate is consistent iff it forms the
// target structure in none of them, so one can be built directly.
Verdict all_negative_matching(const Instance& instance) {
    const int n = instance.n;
    const int k = *instance.k;
    const auto& samples = instance.samples;
    if (k == 0)
        return samples.empty() ? Verdict::found(Solution::pset({})) : Verdict::no_solution();
    if (static_cast<std::uint64_t>(k) > pair_count(n)) return Verdict::no_solution();
    if (k == 1) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                Pair p(u, v);
                bool hit = false;
                for (const Sample& s : samples) hit = hit || s.edges.contains(p);
                if (!hit) return checked_found(instance, Solution::pset({p}));
            }
        return Verdict::no_solution();
    }
    // k >= 2 and enough pairs implies n >= 3: edges through vertex 0 are
    // never vertex-disjoint, so the bundle is a matching in no sample.
    return checked_found(instance,
                         Solution::pset(fill_pairs({Pair(0, 1), Pair(0, 2)}, n, k)));
}

Verdict all_negative_path(const Instance& instance) {
    const int n = instance.n;
    const int k = *instance.k;
    const auto& samples = instance.samples;
    if (k == 0)
        return samples.empty() ? Verdict::found(Solution::pset({})) : Verdict::no_solution();
    if (static_cast<std::uint64_t>(k) > pair_count(n)) return Verdict::no_solution();
    if (k == 1) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                Pair p(u, v);
                bool hit = false;
                for (const Sample& s : samples) hit = hit || s.edges.contains(p);
                if (!hit) return checked_found(instance, Solution::pset({p}));
            }
        return Verdict::no_solution();
    }
    if (k + 1 > n)  // no k-edge path fits in n vertices, any k pairs do
        return checked_found(instance, Solution::pset(fill_pairs({}, n, k)));
    if (k == 2 && n == 3) {  // every 2-subset of a triangle is a path
        std::vector<Pair> pool = {Pair(0, 1), Pair(0, 2), Pair(1, 2)};
        for (std::size_t a = 0; a < pool.size(); ++a)
            for (std::size_t b = a + 1; b < pool.size(); ++b) {
                Solution s = Solution::pset({pool[a], pool[b]});
                if (is_consistent(instance, s)) return Verdict::found(std::move(s));
            }
        return Verdict::no_solution();
    }
    if (k == 2)  // n >= 4: two disjoint pairs are disconnected, never a path
        return checked_found(instance, Solution::pset({Pair(0, 1), Pair(2, 3)}));
    // k >= 3, n >= 4: a claw at vertex 0 keeps degree 3 whatever fills in
    return checked_found(instance,
                         Solution::pset(fill_pairs({Pair(0, 1), Pair(0, 2), Pair(0, 3)}, n, k)));
}

}  // namespace

Verdict solve_matching(const Instance& instance, const SolveOptions& options) {
    instance.validate();
    const int k = *instance.k;
    if (!has_positive(instance)) return all_negative_matching(instance);

    std::vector<EdgeSet> negatives = negative_edge_sets(instance);
    if (k == 0)
        return negatives.empty() ? Verdict::found(Solution::pset({})) : Verdict::no_solution();
    EdgeSet common = intersect_positives(instance);
    if (static_cast<int>(common.size()) < k || 2 * k > instance.n) return Verdict::no_solution();

    ColoringFamily family =
        options.mode == ColoringMode::Exhaustive
            ? ColoringFamily::exhaustive(2 * k, instance.n, options.exhaustive_cap)
            : ColoringFamily::random(2 * k, instance.n, options.seed, options.trials);

    auto attempt = [&](std::uint64_t i) -> std::optional<Solution> {
        auto f = dp_matching(common, negatives, k, family.coloring(i));
        if (!f) return std::nullopt;
        Solution s = Solution::pset(std::move(*f));
        if (!is_consistent(instance, s)) return std::nullopt;
        return s;
    };
    auto hit = exec::find_first(family.size(), options.exec_mode,
                                [&](std::uint64_t i) { return attempt(i).has_value(); });
    if (!hit) return Verdict::no_solution();
    return Verdict::found(*attempt(*hit));
}

Verdict solve_path(const Instance& instance, const SolveOptions& options) {
    instance.validate();
    const int k = *instance.k;
    if (!has_positive(instance)) return all_negative_path(instance);

    std::vector<EdgeSet> negatives = negative_edge_sets(instance);
    if (k == 0)
        return negatives.empty() ? Verdict::found(Solution::pset({})) : Verdict::no_solution();
    EdgeSet common = intersect_positives(instance);
    if (static_cast<int>(common.size()) < k || k + 1 > instance.n) return Verdict::no_solution();

    ColoringFamily family =
        options.mode == ColoringMode::Exhaustive
            ? ColoringFamily::exhaustive(k + 1, instance.n, options.exhaustive_cap)
            : ColoringFamily::random(k + 1, instance.n, options.seed, options.trials);

    auto attempt = [&](std::uint64_t i) -> std::optional<Solution> {
        auto f = dp_path(common, negatives, k, family.coloring(i));
        if (!f) return std::nullopt;
        Solution s = Solution::pset(std::move(*f));
        if (!is_consistent(instance, s)) return std::nullopt;
        return s;
    };
    auto hit = exec::find_first(family.size(), options.exec_mode,
                                [&](std::uint64_t i) { return attempt(i).has_value(); });
    if (!hit) return Verdict::no_solution();
    return Verdict::found(*attempt(*hit));
}

}  // namespace conscheck
