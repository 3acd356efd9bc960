#include "conscheck/vertex_solvers.hpp"

#include <algorithm>
#include <numeric>

#include "conscheck/numeric.hpp"
#include "conscheck/oracle.hpp"

namespace conscheck {

Verdict solve_dominating_set(const Instance& instance, exec::Mode mode) {
    instance.validate();
    const int n = instance.n;
    const int k = *instance.k;
    const int d = *instance.d;
    if (k > n) return Verdict::no_solution();

    bool any_positive = false;
    for (const Sample& s : instance.samples) any_positive = any_positive || (s.label == 1);

    std::uint64_t coverage = sat_mul(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(d) + 1);
    if (static_cast<std::uint64_t>(n) > coverage) {
        if (any_positive) return Verdict::no_solution();
        // any k-set leaves some vertex undominated in every sample
        std::vector<VertexId> x(static_cast<std::size_t>(k));
        std::iota(x.begin(), x.end(), 0);
        Solution s = Solution::vset(std::move(x));
        if (!is_consistent(instance, s)) return Verdict::no_solution();
        return Verdict::found(std::move(s));
    }

    // n <= k(d+1): scan the k-subsets in lexicographic order
    return oracle_solve(instance, kDefaultOracleBudget, mode);
}

bool SolutionTemplate::has_edge(int a, int b) const {
    return label(a, b) != 0;
}

std::uint32_t SolutionTemplate::label(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i] == std::make_pair(a, b)) return labels[i];
    return 0;
}

std::vector<SolutionTemplate> enumerate_templates(int k, int t_minus) {
    if (t_minus > 31) throw std::invalid_argument("enumerate_templates: too many negative samples");
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) slots.emplace_back(a, b);

    const std::uint64_t options = std::uint64_t{1} << t_minus;  // 0 = absent, else the label
    std::uint64_t total = sat_pow(options, slots.size());
    if (total > 50'000'000) throw std::length_error("template space too large");

    const std::uint32_t full = t_minus == 0 ? 0 : (1u << t_minus) - 1;
    std::vector<SolutionTemplate> out;
    for (std::uint64_t v = 0; v < total; ++v) {
        SolutionTemplate t;
        t.k = k;
        std::uint64_t rest = v;
        std::uint32_t used = 0;
        for (const auto& slot : slots) {
            std::uint32_t lab = static_cast<std::uint32_t>(rest % options);
            rest /= options;
            if (lab != 0) {
                t.edges.push_back(slot);
                t.labels.push_back(lab);
                used |= lab;
            }
        }
        if (used != full) continue;  // every negative sample must occur somewhere
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

struct SampleSplit {
    std::vector<const EdgeSet*> negatives;
    std::vector<const EdgeSet*> positives;
};

SampleSplit split_samples(const Instance& instance) {
    SampleSplit sp;
    for (const Sample& s : instance.samples)
        (s.label == 0 ? sp.negatives : sp.positives).push_back(&s.edges);
    return sp;
}

// adjacency of v in one edge set, ascending
std::vector<VertexId> neighbors(const EdgeSet& edges, VertexId v) {
    std::vector<VertexId> out;
    for (const Pair& e : edges.edges()) {
        if (e.u == v) out.push_back(e.v);
        if (e.v == v) out.push_back(e.u);
    }
    return out;
}

}  // namespace

std::vector<std::vector<VertexId>> place_component(const SolutionTemplate& tmpl,
                                                   const std::vector<int>& comp_nodes,
                                                   const std::vector<int>& coloring,
                                                   const Instance& instance) {
    const SampleSplit sp = split_samples(instance);
    const int n = instance.n;

    // BFS tree over the component in template-edge order
    std::vector<int> order = {comp_nodes.front()};
    std::vector<std::pair<int, int>> tree_parent;  // (parent node, label bit) per order[i], i >= 1
    {
        std::vector<char> seen(static_cast<std::size_t>(tmpl.k), 0);
        seen[static_cast<std::size_t>(comp_nodes.front())] = 1;
        for (std::size_t head = 0; head < order.size(); ++head) {
            int u = order[head];
            for (int w : comp_nodes) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                std::uint32_t lab = tmpl.label(u, w);
                if (lab == 0) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                order.push_back(w);
                tree_parent.emplace_back(u, std::countr_zero(lab));
            }
        }
        if (order.size() != comp_nodes.size())
            throw std::logic_error("place_component: nodes do not form one component");
    }

    auto pattern_ok = [&](VertexId v, int node_v, const std::vector<std::optional<VertexId>>& assigned) {
        for (int u_node : comp_nodes) {
            if (!assigned[static_cast<std::size_t>(u_node)]) continue;
            VertexId u = *assigned[static_cast<std::size_t>(u_node)];
            if (u == v) return false;
            Pair p(u, v);
            std::uint32_t want = tmpl.label(u_node, node_v);
            for (std::size_t z = 0; z < sp.negatives.size(); ++z) {
                bool adj = sp.negatives[z]->contains(p);
                if (adj != ((want >> z) & 1u)) return false;
            }
            for (const EdgeSet* pos : sp.positives)
                if (pos->contains(p)) return false;
        }
        return true;
    };

    std::vector<std::vector<VertexId>> tuples;
    std::vector<std::optional<VertexId>> assigned(static_cast<std::size_t>(tmpl.k));

    auto extend = [&](auto&& self, std::size_t depth) -> void {
        if (depth == order.size()) {
            std::vector<VertexId> tuple;
            tuple.reserve(comp_nodes.size());
            for (int node : comp_nodes) tuple.push_back(*assigned[static_cast<std::size_t>(node)]);
            tuples.push_back(std::move(tuple));
            return;
        }
        int node = order[depth];
        auto [parent_node, z] = tree_parent[depth - 1];
        VertexId pv = *assigned[static_cast<std::size_t>(parent_node)];
        for (VertexId cand : neighbors(*sp.negatives[static_cast<std::size_t>(z)], pv)) {
            if (coloring[static_cast<std::size_t>(cand)] != node) continue;
            if (!pattern_ok(cand, node, assigned)) continue;
            assigned[static_cast<std::size_t>(node)] = cand;
            self(self, depth + 1);
            assigned[static_cast<std::size_t>(node)] = std::nullopt;
        }
    };

    int root = comp_nodes.front();
    for (VertexId v = 0; v < n; ++v) {
        if (coloring[static_cast<std::size_t>(v)] != root) continue;
        assigned[static_cast<std::size_t>(root)] = v;
        extend(extend, 1);
        assigned[static_cast<std::size_t>(root)] = std::nullopt;
    }
    return tuples;
}

std::uint64_t placement_threshold(int k, int d, int t) {
    std::uint64_t dt = sat_mul(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(t));
    std::uint64_t pool = sat_mul(sat_mul(static_cast<std::uint64_t>(k), dt),
                                 sat_pow(dt, static_cast<std::uint64_t>(k)));
    std::uint64_t theta = 0;
    for (int i = 1; i <= k; ++i) theta = sat_add(theta, sat_binom(pool, static_cast<std::uint64_t>(i)));
    return theta;
}

namespace {

struct ComponentPlan {
    std::vector<int> nodes;  // sorted template node ids
    std::vector<std::vector<VertexId>> tuples;
    bool small = false;
};

// true iff v clashes with any vertex of chosen in some positive sample
bool positive_clash(VertexId v, const std::vector<VertexId>& chosen,
                    const std::vector<const EdgeSet*>& positives) {
    for (VertexId u : chosen) {
        if (u == v) return true;
        for (const EdgeSet* pos : positives)
            if (pos->contains(Pair(u, v))) return true;
    }
    return false;
}

}  // namespace

Verdict solve_independent_set(const Instance& instance, const SolveOptions& options) {
    instance.validate();
    const int n = instance.n;
    const int k = *instance.k;
    const int d = *instance.d;
    const int t = static_cast<int>(instance.samples.size());
    const SampleSplit sp = split_samples(instance);
    const int tneg = static_cast<int>(sp.negatives.size());

    if (k == 0) {
        if (!sp.negatives.empty()) return Verdict::no_solution();
        return Verdict::found(Solution::vset({}));
    }
    if (k > n) return Verdict::no_solution();

    std::vector<SolutionTemplate> templates = enumerate_templates(k, tneg);
    if (templates.empty()) return Verdict::no_solution();

    const std::uint64_t theta = placement_threshold(k, d, t);

    ColoringFamily family = options.mode == ColoringMode::Exhaustive
                                ? ColoringFamily::exhaustive(k, n, options.exhaustive_cap)
                                : ColoringFamily::random(k, n, options.seed, options.trials);

    const std::uint64_t jobs = sat_mul(family.size(), templates.size());
    if (jobs == kSaturated) throw std::runtime_error("independent-set job space overflow");

    auto run_job = [&](std::uint64_t job) -> std::optional<Solution> {
        const SolutionTemplate& tmpl =
            templates[static_cast<std::size_t>(job % templates.size())];
        std::vector<int> coloring = family.coloring(job / templates.size());

        // connected components of the template, by smallest node
        std::vector<ComponentPlan> comps;
        {
            std::vector<char> seen(static_cast<std::size_t>(k), 0);
            for (int s = 0; s < k; ++s) {
                if (seen[static_cast<std::size_t>(s)]) continue;
                std::vector<int> stack = {s};
                std::vector<int> nodes;
                seen[static_cast<std::size_t>(s)] = 1;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    nodes.push_back(u);
                    for (int w = 0; w < k; ++w)
                        if (!seen[static_cast<std::size_t>(w)] && tmpl.has_edge(u, w)) {
                            seen[static_cast<std::size_t>(w)] = 1;
                            stack.push_back(w);
                        }
                }
                std::sort(nodes.begin(), nodes.end());
                comps.push_back({std::move(nodes), {}, false});
            }
        }

        std::vector<std::size_t> small_comps, large_comps;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            comps[c].tuples = place_component(tmpl, comps[c].nodes, coloring, instance);
            if (comps[c].tuples.empty()) return std::nullopt;
            comps[c].small = comps[c].tuples.size() <= theta;
            (comps[c].small ? small_comps : large_comps).push_back(c);
        }

        std::uint64_t branches = 1;
        for (std::size_t c : small_comps) branches = sat_mul(branches, comps[c].tuples.size());
        if (branches == kSaturated) throw std::runtime_error("independent-set branch overflow");

        for (std::uint64_t b = 0; b < branches; ++b) {
            std::vector<VertexId> chosen;
            chosen.reserve(static_cast<std::size_t>(k));
            std::uint64_t rest = b;
            bool ok = true;
            for (std::size_t ci = small_comps.size(); ci-- > 0 && ok;) {
                const ComponentPlan& cp = comps[small_comps[ci]];
                const auto& tuple = cp.tuples[static_cast<std::size_t>(rest % cp.tuples.size())];
                rest /= cp.tuples.size();
                for (VertexId v : tuple)
                    if (positive_clash(v, chosen, sp.positives)) {
                        ok = false;
                        break;
                    }
                if (ok) chosen.insert(chosen.end(), tuple.begin(), tuple.end());
            }
            for (std::size_t ci = 0; ci < large_comps.size() && ok; ++ci) {
                const ComponentPlan& cp = comps[large_comps[ci]];
                bool placed = false;
                for (const auto& tuple : cp.tuples) {
                    bool fits = true;
                    for (VertexId v : tuple)
                        if (positive_clash(v, chosen, sp.positives)) {
                            fits = false;
                            break;
                        }
                    if (fits) {
                        chosen.insert(chosen.end(), tuple.begin(), tuple.end());
                        placed = true;
                        break;
                    }
                }
                ok = placed;
            }
            if (!ok) continue;
            Solution s = Solution::vset(chosen);
            if (is_consistent(instance, s)) return s;
        }
        return std::nullopt;
    };

    auto hit = exec::find_first(jobs, options.exec_mode,
                                [&](std::uint64_t j) { return run_job(j).has_value(); });
    if (!hit) return Verdict::no_solution();
    return Verdict::found(*run_job(*hit));
}

}  // namespace conscheck
