#include "conscheck/clique_cover.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "conscheck/numeric.hpp"
#include "conscheck/oracle.hpp"

namespace conscheck {

namespace {

struct Graph {
    std::vector<std::set<VertexId>> adj;

    explicit Graph(int n) : adj(static_cast<std::size_t>(n)) {}

    void add_edge(Pair e) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    void remove_vertex(VertexId v) {
        for (VertexId w : adj[static_cast<std::size_t>(v)]) adj[static_cast<std::size_t>(w)].erase(v);
        adj[static_cast<std::size_t>(v)].clear();
    }
    int degree(VertexId v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
    bool adjacent(VertexId u, VertexId v) const { return adj[static_cast<std::size_t>(u)].contains(v); }
    int n() const { return static_cast<int>(adj.size()); }
};

// All maximal cliques containing both endpoints of e, each sorted, listed in
// a deterministic order (plain Bron-Kerbosch over the common neighborhood).
void maximal_cliques_with_edge(const Graph& g, Pair e, std::vector<std::vector<VertexId>>& out) {
    std::vector<VertexId> common;
    for (VertexId w : g.adj[static_cast<std::size_t>(e.u)])
        if (w != e.v && g.adjacent(e.v, w)) common.push_back(w);

    std::vector<VertexId> r = {e.u, e.v};
    // bk over (r, p, x)
    auto bk = [&](auto&& self, std::vector<VertexId>& cur, std::vector<VertexId> p,
                  std::vector<VertexId> x) -> void {
        if (p.empty() && x.empty()) {
            std::vector<VertexId> clique = cur;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
            return;
        }
        while (!p.empty()) {
            VertexId v = p.front();
            p.erase(p.begin());
            std::vector<VertexId> np, nx;
            for (VertexId w : p)
                if (g.adjacent(v, w)) np.push_back(w);
            for (VertexId w : x)
                if (g.adjacent(v, w)) nx.push_back(w);
            cur.push_back(v);
            self(self, cur, std::move(np), std::move(nx));
            cur.pop_back();
            x.push_back(v);
        }
    };
    bk(bk, r, std::move(common), {});
}

struct TwinRemoval {
    VertexId removed;
    VertexId kept;
};

bool branch_cover(Graph& g, std::vector<Pair>& uncovered, int budget,
                  std::vector<std::vector<VertexId>>& chosen) {
    if (uncovered.empty()) return true;
    if (static_cast<int>(chosen.size()) == budget) return false;
    Pair e = uncovered.front();
    std::vector<std::vector<VertexId>> cliques;
    maximal_cliques_with_edge(g, e, cliques);
    for (auto& clique : cliques) {
        std::set<Pair> covered;
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) covered.insert(Pair(clique[i], clique[j]));
        std::vector<Pair> rest;
        for (const Pair& p : uncovered)
            if (!covered.contains(p)) rest.push_back(p);
        chosen.push_back(clique);
        if (branch_cover(g, rest, budget, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::vector<VertexId>>> cover_edges_exactly(const EdgeSet& edges, int n,
                                                                      int budget) {
    if (edges.empty()) return std::vector<std::vector<VertexId>>{};
    if (budget <= 0) return std::nullopt;

    Graph g(n);
    for (const Pair& e : edges.edges()) g.add_edge(e);

    // exhaustively remove twins that keep a companion neighbor
    std::vector<TwinRemoval> lifts;
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId u = 0; u < n && !changed; ++u) {
            if (g.degree(u) < 2) continue;
            for (VertexId v : g.adj[static_cast<std::size_t>(u)]) {
                if (v < u) continue;
                // closed neighborhoods equal <=> adjacent with same neighbors besides each other
                std::set<VertexId> nu = g.adj[static_cast<std::size_t>(u)];
                std::set<VertexId> nv = g.adj[static_cast<std::size_t>(v)];
                nu.erase(v);
                nv.erase(u);
                if (nu == nv) {
                    lifts.push_back({v, u});
                    g.remove_vertex(v);
                    changed = true;
                    break;
                }
            }
        }
    }

    int non_isolated = 0;
    for (VertexId v = 0; v < n; ++v) non_isolated += (g.degree(v) > 0);
    std::uint64_t kernel_limit =
        sat_add(2 * static_cast<std::uint64_t>(budget), sat_pow(2, std::min(budget, 30)));
    if (static_cast<std::uint64_t>(non_isolated) > kernel_limit) return std::nullopt;

    std::vector<Pair> uncovered;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.adj[static_cast<std::size_t>(u)])
            if (u < v) uncovered.emplace_back(u, v);
    std::sort(uncovered.begin(), uncovered.end());

    std::vector<std::vector<VertexId>> chosen;
    if (!branch_cover(g, uncovered, budget, chosen)) return std::nullopt;

    // undo twin removals: the removed vertex joins every clique of its twin
    for (auto it = lifts.rbegin(); it != lifts.rend(); ++it) {
        for (auto& clique : chosen)
            if (std::binary_search(clique.begin(), clique.end(), it->kept)) {
                clique.insert(std::upper_bound(clique.begin(), clique.end(), it->removed), it->removed);
            }
    }
    return chosen;
}

namespace {

// Distinct cliques (size >= 2, sorted vertex lists) of (V, edges) not already
// in `taken`, appended in a deterministic order until `need` more are found.
// Pass 1 walks the edges as two-vertex cliques; pass 2 (reached only when the
// edge list is nearly exhausted, so the graph is small) enumerates subsets of
// the non-isolated vertices.
bool pad_with_cliques(const EdgeSet& edges, std::vector<std::vector<VertexId>>& members, int k) {
    std::set<std::vector<VertexId>> taken(members.begin(), members.end());
    for (const Pair& e : edges.edges()) {
        if (static_cast<int>(members.size()) >= k) return true;
        std::vector<VertexId> two = {e.u, e.v};
        if (taken.insert(two).second) members.push_back(std::move(two));
    }
    if (static_cast<int>(members.size()) >= k) return true;

    std::vector<VertexId> verts;
    for (const Pair& e : edges.edges()) {
        verts.push_back(e.u);
        verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() >= 26) throw std::length_error("clique pool too large to enumerate");

    std::uint64_t top = std::uint64_t{1} << verts.size();
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        if (std::popcount(mask) < 3) continue;
        std::vector<VertexId> member;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) member.push_back(verts[i]);
        bool clique = true;
        for (std::size_t i = 0; i < member.size() && clique; ++i)
            for (std::size_t j = i + 1; j < member.size() && clique; ++j)
                clique = edges.contains(Pair(member[i], member[j]));
        if (!clique) continue;
        if (taken.insert(member).second) members.push_back(std::move(member));
        if (static_cast<int>(members.size()) >= k) return true;
    }
    return static_cast<int>(members.size()) >= k;
}

Verdict all_negative_clique_cover(const Instance& instance) {
    const int n = instance.n;
    const int k = *instance.k;
    if (k == 0) {
        for (const Sample& s : instance.samples)
            if (s.edges.empty()) return Verdict::no_solution();
        return Verdict::found(Solution::cover({}));
    }

    if (k <= n - 1) {
        // star family {{0,a} : a in A}: a negative kills it only by equaling
        // the star's edge set, so scanning t+1 candidate A-sets suffices.
        std::uint64_t limit = static_cast<std::uint64_t>(instance.samples.size()) + 1;
        std::uint64_t available = sat_binom(static_cast<std::uint64_t>(n) - 1, static_cast<std::uint64_t>(k));
        std::uint64_t scan = std::min(available, limit);
        for (std::uint64_t idx = 0; idx < scan; ++idx) {
            // unrank the idx-th k-subset of {1..n-1} lexicographically
            std::vector<VertexId> a;
            std::uint64_t r = idx;
            std::uint64_t cur = 1;
            for (int i = 0; i < k; ++i) {
                for (;;) {
                    std::uint64_t c = sat_binom(static_cast<std::uint64_t>(n) - 1 - cur,
                                                static_cast<std::uint64_t>(k - i - 1));
                    if (r < c) break;
                    r -= c;
                    ++cur;
                }
                a.push_back(static_cast<VertexId>(cur));
                ++cur;
            }
            std::vector<std::vector<VertexId>> members;
            for (VertexId x : a) members.push_back({0, x});
            Solution s = Solution::cover(std::move(members));
            if (is_consistent(instance, s)) return Verdict::found(std::move(s));
        }
        // available > limit cannot reach here (some scanned star survives
        // every negative); available <= limit means stars are exhausted and
        // the enumeration below decides.
    }

    // tiny vertex set (or k too big for stars): enumerate families outright
    CandidateEnumerator en(instance);
    if (en.count() > kDefaultOracleBudget)
        throw std::runtime_error("all-negative cover enumeration too large");
    return oracle_solve(instance);
}

}  // namespace

Verdict solve_clique_cover(const Instance& instance) {
    instance.validate();
    const int k = *instance.k;

    std::vector<const EdgeSet*> positives;
    for (const Sample& s : instance.samples)
        if (s.label == 1) positives.push_back(&s.edges);
    for (std::size_t i = 1; i < positives.size(); ++i)
        if (!(*positives[i] == *positives[0])) return Verdict::no_solution();

    if (positives.empty()) return all_negative_clique_cover(instance);

    const EdgeSet& target = *positives[0];
    for (const Sample& s : instance.samples)
        if (s.label == 0 && s.edges == target) return Verdict::no_solution();

    // a cover of the positive is automatically a cover of no other edge set
    if (target.empty())
        return k == 0 ? Verdict::found(Solution::cover({})) : Verdict::no_solution();
    if (k == 0) return Verdict::no_solution();

    auto cover = cover_edges_exactly(target, instance.n, k);
    if (!cover) return Verdict::no_solution();
    if (!pad_with_cliques(target, *cover, k)) return Verdict::no_solution();
    Solution s = Solution::cover(std::move(*cover));
    if (!is_consistent(instance, s)) return Verdict::no_solution();
    return Verdict::found(std::move(s));
}

}  // namespace conscheck
