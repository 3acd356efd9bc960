#include "conscheck/two_coloring.hpp"

#include <algorithm>
#include <queue>

#include "conscheck/numeric.hpp"
#include "conscheck/parity_forest.hpp"

namespace conscheck {

namespace {

struct PartStructure {
    int num_comps = 0;
    std::vector<int> comp;        // vertex -> component id (by smallest vertex)
    std::vector<std::uint8_t> side;  // vertex -> side within its component
    std::vector<char> comp_has_edge;
    bool bipartite = true;
};

PartStructure build_parts(const EdgeSet& positive_union, int n) {
    PartStructure ps;
    ps.comp.assign(static_cast<std::size_t>(n), -1);
    ps.side.assign(static_cast<std::size_t>(n), 0);

    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (const Pair& e : positive_union.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (int start = 0; start < n; ++start) {
        if (ps.comp[static_cast<std::size_t>(start)] != -1) continue;
        int c = ps.num_comps++;
        ps.comp_has_edge.push_back(!adj[static_cast<std::size_t>(start)].empty());
        ps.comp[static_cast<std::size_t>(start)] = c;
        ps.side[static_cast<std::size_t>(start)] = 0;
        std::queue<VertexId> q;
        q.push(start);
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId v : adj[static_cast<std::size_t>(u)]) {
                if (ps.comp[static_cast<std::size_t>(v)] == -1) {
                    ps.comp[static_cast<std::size_t>(v)] = c;
                    ps.side[static_cast<std::size_t>(v)] =
                        static_cast<std::uint8_t>(1 ^ ps.side[static_cast<std::size_t>(u)]);
                    q.push(v);
                } else if (ps.side[static_cast<std::size_t>(v)] == ps.side[static_cast<std::size_t>(u)]) {
                    ps.bipartite = false;
                    return ps;
                }
            }
        }
    }
    return ps;
}

struct Signature {
    std::vector<std::pair<int, int>> pairs;  // usable pairs (p <= q), lex sorted
    bool small = false;
    // For non-small signatures: one representative pair per touched
    // component, for the first 2*tneg + 1 components in lex pair order.
    std::vector<std::pair<int, int>> reps;
};

}  // namespace

Verdict solve_two_coloring(const Instance& instance, exec::Mode mode) {
    instance.validate();
    const int n = instance.n;

    EdgeSet positive_union;
    std::vector<const Sample*> negatives;
    for (const Sample& s : instance.samples) {
        if (s.label == 1)
            positive_union = edge_union(positive_union, s.edges);
        else
            negatives.push_back(&s);
    }
    const int tneg = static_cast<int>(negatives.size());

    PartStructure ps = build_parts(positive_union, n);
    if (!ps.bipartite) return Verdict::no_solution();
    auto part_of = [&](VertexId v) {
        return 2 * ps.comp[static_cast<std::size_t>(v)] + ps.side[static_cast<std::size_t>(v)];
    };
    const int num_parts = 2 * ps.num_comps;

    const std::uint64_t small_limit = 16ull * static_cast<std::uint64_t>(tneg) * static_cast<std::uint64_t>(tneg);
    std::vector<Signature> sigs(negatives.size());
    for (std::size_t i = 0; i < negatives.size(); ++i) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(negatives[i]->edges.size());
        for (const Pair& e : negatives[i]->edges.edges()) {
            int p = part_of(e.u), q = part_of(e.v);
            if (p > q) std::swap(p, q);
            if (p / 2 == q / 2 && p != q) continue;  // joins the two sides of one component
            pairs.emplace_back(p, q);
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        if (pairs.empty()) return Verdict::no_solution();  // sample can never be violated
        sigs[i].small = pairs.size() <= small_limit;
        if (sigs[i].small) {
            sigs[i].pairs = std::move(pairs);
        } else {
            std::vector<char> seen(static_cast<std::size_t>(ps.num_comps), 0);
            const std::size_t want = 2 * static_cast<std::size_t>(tneg) + 1;
            for (const auto& pr : pairs) {
                for (int comp : {pr.first / 2, pr.second / 2}) {
                    if (!seen[static_cast<std::size_t>(comp)]) {
                        seen[static_cast<std::size_t>(comp)] = 1;
                        sigs[i].reps.push_back(pr);
                    }
                }
                if (sigs[i].reps.size() >= want) break;
            }
        }
    }

    // Branch space: one choice per small signature, in sample order, the
    // first signature varying slowest.
    std::vector<std::size_t> small_idx;
    for (std::size_t i = 0; i < sigs.size(); ++i)
        if (sigs[i].small) small_idx.push_back(i);
    std::uint64_t total = 1;
    for (std::size_t i : small_idx) total = sat_mul(total, sigs[i].pairs.size());
    if (total == kSaturated) throw std::runtime_error("two-coloring branch space overflow");

    ParityForest base(num_parts);
    for (int c = 0; c < ps.num_comps; ++c)
        if (ps.comp_has_edge[static_cast<std::size_t>(c)]) base.diff(2 * c, 2 * c + 1);

    // Runs one branch; returns the candidate X on success.
    auto run_branch = [&](std::uint64_t b) -> std::optional<std::vector<VertexId>> {
        ParityForest pf = base;
        std::vector<char> used(static_cast<std::size_t>(ps.num_comps), 0);
        std::uint64_t rest = b;
        std::vector<std::pair<int, int>> chosen(small_idx.size());
        for (std::size_t j = small_idx.size(); j-- > 0;) {
            std::uint64_t z = sigs[small_idx[j]].pairs.size();
            chosen[j] = sigs[small_idx[j]].pairs[static_cast<std::size_t>(rest % z)];
            rest /= z;
        }
        for (const auto& pr : chosen) {
            if (!pf.same(pr.first, pr.second)) return std::nullopt;
            used[static_cast<std::size_t>(pr.first / 2)] = 1;
            used[static_cast<std::size_t>(pr.second / 2)] = 1;
        }
        for (const Signature& sig : sigs) {
            if (sig.small) continue;
            bool done = false;
            for (const auto& pr : sig.reps) {
                if (used[static_cast<std::size_t>(pr.first / 2)] && used[static_cast<std::size_t>(pr.second / 2)])
                    continue;
                if (!pf.same(pr.first, pr.second)) return std::nullopt;
                used[static_cast<std::size_t>(pr.first / 2)] = 1;
                used[static_cast<std::size_t>(pr.second / 2)] = 1;
                done = true;
                break;
            }
            if (!done) return std::nullopt;
        }
        std::vector<int> colors = pf.coloring();
        std::vector<VertexId> x;
        for (VertexId v = 0; v < n; ++v)
            if (colors[static_cast<std::size_t>(part_of(v))] == 1) x.push_back(v);
        if (!is_consistent(instance, Solution::vset(x))) return std::nullopt;
        return x;
    };

    auto hit = exec::find_first(total, mode, [&](std::uint64_t b) { return run_branch(b).has_value(); });
    if (!hit) return Verdict::no_solution();
    return Verdict::found(Solution::vset(*run_branch(*hit)));
}

}  // namespace conscheck
