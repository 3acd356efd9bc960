#include "conscheck/split.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace conscheck {

std::vector<std::vector<VertexId>> enumerate_splits(const EdgeSet& edges, int n) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Pair& e : edges.edges()) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });

    // m = max{i in [1, n] : d_i >= i - 1} over the sorted degree sequence;
    // the graph splits iff the head degree sum meets m(m-1) plus the tail sum.
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (deg[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])] >= i - 1) m = i;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i) {
        long long d = deg[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        (i < m ? head : tail) += d;
    }
    if (head != static_cast<long long>(m) * (m - 1) + tail) return {};

    // The top-m vertices form a valid split (clique side) whenever the
    // condition holds, and the clique sides of two splits can differ by at
    // most one vertex each way (the difference is a clique inside the other
    // split's independent side). So every split is the base, the base less
    // one vertex, the base with one swap, or the base plus one vertex.
    std::vector<VertexId> base(order.begin(), order.begin() + m);
    std::sort(base.begin(), base.end());
    std::vector<char> in_base(static_cast<std::size_t>(n), 0);
    for (VertexId v : base) in_base[static_cast<std::size_t>(v)] = 1;

    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) * words, 0);
    auto set_bit = [&](int r, int v) {
        adj[static_cast<std::size_t>(r) * words + static_cast<std::size_t>(v >> 6)] |=
            std::uint64_t{1} << (v & 63);
    };
    for (const Pair& e : edges.edges()) {
        set_bit(e.u, e.v);
        set_bit(e.v, e.u);
    }
    auto adjacent = [&](int a, int b) {
        return (adj[static_cast<std::size_t>(a) * words + static_cast<std::size_t>(b >> 6)] >>
                (b & 63)) &
               1;
    };

    // Exact incremental validity data:
    //   miss[v], v in base: base vertices not adjacent to v (missing clique
    //     edges at v); outn[v], v in base: neighbors of v outside the base.
    //   bmiss[v], v outside: base vertices not adjacent to v; inn[v],
    //     v outside: neighbors of v outside the base.
    // total_miss / total_out are the missing-pair and outside-edge counts.
    std::vector<int> miss(static_cast<std::size_t>(n), 0), outn(static_cast<std::size_t>(n), 0);
    std::vector<int> bmiss(static_cast<std::size_t>(n), 0), inn(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> miss_one(static_cast<std::size_t>(n), -1),
        out_one(static_cast<std::size_t>(n), -1);
    long long total_miss = 0, total_out = 0;
    for (int v = 0; v < n; ++v) {
        int base_adj = 0;
        for (VertexId b : base)
            if (b != v && adjacent(v, b)) ++base_adj;
        if (in_base[static_cast<std::size_t>(v)]) {
            miss[static_cast<std::size_t>(v)] = m - 1 - base_adj;
            outn[static_cast<std::size_t>(v)] =
                deg[static_cast<std::size_t>(v)] - base_adj;
            total_miss += miss[static_cast<std::size_t>(v)];
            if (outn[static_cast<std::size_t>(v)] == 1)
                for (int u = 0; u < n; ++u)
                    if (!in_base[static_cast<std::size_t>(u)] && adjacent(v, u)) {
                        out_one[static_cast<std::size_t>(v)] = u;
                        break;
                    }
        } else {
            bmiss[static_cast<std::size_t>(v)] = m - base_adj;
            inn[static_cast<std::size_t>(v)] = deg[static_cast<std::size_t>(v)] - base_adj;
            total_out += inn[static_cast<std::size_t>(v)];
            if (bmiss[static_cast<std::size_t>(v)] == 1)
                for (VertexId b : base)
                    if (!adjacent(v, b)) {
                        miss_one[static_cast<std::size_t>(v)] = b;
                        break;
                    }
        }
    }
    total_miss /= 2;
    total_out /= 2;

    std::set<std::vector<VertexId>> found;
    auto emit = [&](std::vector<VertexId> x) {
        std::sort(x.begin(), x.end());
        found.insert(std::move(x));
    };

    if (total_miss == 0 && total_out == 0) emit(base);
    for (VertexId out : base) {
        // Base minus `out`: clique needs every missing pair at `out`;
        // independence needs no outside edge and no neighbor outside.
        const bool clique_ok = total_miss == miss[static_cast<std::size_t>(out)];
        if (clique_ok && total_out == 0 && outn[static_cast<std::size_t>(out)] == 0) {
            std::vector<VertexId> smaller;
            for (VertexId v : base)
                if (v != out) smaller.push_back(v);
            emit(smaller);
        }
        if (!clique_ok || outn[static_cast<std::size_t>(out)] > 1) continue;
        for (VertexId in = 0; in < n; ++in) {
            if (in_base[static_cast<std::size_t>(in)]) continue;
            // Swap: `in` must reach all of base minus `out`, cover every
            // outside edge, and absorb the only outside neighbor of `out`.
            if (total_out != inn[static_cast<std::size_t>(in)]) continue;
            if (bmiss[static_cast<std::size_t>(in)] > 1) continue;
            if (bmiss[static_cast<std::size_t>(in)] == 1 &&
                miss_one[static_cast<std::size_t>(in)] != out)
                continue;
            if (outn[static_cast<std::size_t>(out)] == 1 &&
                out_one[static_cast<std::size_t>(out)] != in)
                continue;
            std::vector<VertexId> swapped;
            for (VertexId v : base)
                if (v != out) swapped.push_back(v);
            swapped.push_back(in);
            emit(swapped);
        }
    }
    if (total_miss == 0)
        for (VertexId in = 0; in < n; ++in) {
            if (in_base[static_cast<std::size_t>(in)]) continue;
            if (bmiss[static_cast<std::size_t>(in)] != 0) continue;
            if (total_out != inn[static_cast<std::size_t>(in)]) continue;
            std::vector<VertexId> bigger = base;
            bigger.push_back(in);
            emit(bigger);
        }

    return {found.begin(), found.end()};
}

namespace {

// Subsets of [0, n) ordered by increasing bitmask value, for arbitrary n.
struct SubsetCounter {
    explicit SubsetCounter(int n) : bits(static_cast<std::size_t>(n), false) {}

    std::vector<bool> bits;

    bool advance() {  // false on wrap-around to the empty set
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (!bits[i]) {
                bits[i] = true;
                return true;
            }
            bits[i] = false;
        }
        return false;
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) out.push_back(static_cast<VertexId>(i));
        return out;
    }
};

}  // namespace

Verdict solve_split(const Instance& instance, exec::Mode mode) {
    instance.validate();
    const Sample* positive = nullptr;
    for (const Sample& s : instance.samples)
        if (s.label == 1) {
            positive = &s;
            break;
        }

    if (positive) {
        auto splits = enumerate_splits(positive->edges, instance.n);
        auto hit = exec::find_first(splits.size(), mode, [&](std::uint64_t i) {
            return is_consistent(instance, Solution::vset(splits[i]));
        });
        if (!hit) return Verdict::no_solution();
        return Verdict::found(Solution::vset(splits[*hit]));
    }

    // All samples negative: X works iff it is a partition of no sample, so
    // collect every sample's partitions and take the first subset not among
    // them.
    std::set<std::vector<VertexId>> blocked;
    for (const Sample& s : instance.samples)
        for (auto& x : enumerate_splits(s.edges, instance.n)) blocked.insert(std::move(x));

    SubsetCounter counter(instance.n);
    for (;;) {
        std::vector<VertexId> x = counter.vertices();
        if (!blocked.contains(x)) {
            Solution sol = Solution::vset(std::move(x));
            if (is_consistent(instance, sol)) return Verdict::found(std::move(sol));
        }
        if (!counter.advance()) break;
    }
    return Verdict::no_solution();
}

}  // namespace conscheck
