// Times the dedicated solvers with the serial and the OpenMP-parallel
// candidate scan on planted synthetic instances and prints one CSV row per
// (instance, mode). Both modes must report the same verdict.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "conscheck/model.hpp"
#include "conscheck/solve.hpp"

using namespace conscheck;

namespace {

EdgeSet random_edges(std::mt19937_64& rng, int n, int count) {
    std::vector<Pair> ps;
    std::set<Pair> seen;
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<int>(ps.size()) < count) {
        const int u = pick(rng);
        const int v = pick(rng);
        if (u == v) continue;
        const Pair p(std::min(u, v), std::max(u, v));
        if (seen.insert(p).second) ps.push_back(p);
    }
    return EdgeSet::from_pairs(std::move(ps));
}

// Cross edges of the even/odd bipartition, so the positive sample is
// properly two-colorable by construction.
Instance planted_two_coloring(int n, int edges, int negatives, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Pair> cross;
    std::set<Pair> seen;
    while (static_cast<int>(cross.size()) < edges) {
        const int u = pick(rng);
        const int v = pick(rng);
        if (u == v || u % 2 == v % 2) continue;
        const Pair p(std::min(u, v), std::max(u, v));
        if (seen.insert(p).second) cross.push_back(p);
    }
    Instance inst;
    inst.problem = Problem::TwoColoring;
    inst.n = n;
    inst.samples.push_back({EdgeSet::from_pairs(std::move(cross)), 1});
    for (int i = 0; i < negatives; ++i)
        inst.samples.push_back({random_edges(rng, n, edges / 2), 0});
    inst.validate();
    return inst;
}

Instance planted_matching(int n, int k, int negatives, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Pair> planted;
    for (int i = 0; i < k; ++i) planted.emplace_back(2 * i, 2 * i + 1);
    EdgeSet extra = random_edges(rng, n, 4 * n);
    std::vector<Pair> pos = extra.edges();
    for (const Pair& p : planted)
        if (!extra.contains(p)) pos.push_back(p);
    Instance inst;
    inst.problem = Problem::Matching;
    inst.n = n;
    inst.k = k;
    inst.samples.push_back({EdgeSet::from_pairs(std::move(pos)), 1});
    for (int i = 0; i < negatives; ++i)
        inst.samples.push_back({random_edges(rng, n, n), 0});
    inst.validate();
    return inst;
}

Instance planted_split(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Clique on the first quarter, random spokes outward: a split graph.
    const int c = n / 4 + 2;
    std::vector<Pair> edges;
    for (int u = 0; u < c; ++u)
        for (int v = u + 1; v < c; ++v) edges.emplace_back(u, v);
    std::uniform_int_distribution<int> inner(0, c - 1);
    std::uniform_int_distribution<int> outer(c, n - 1);
    std::set<Pair> seen(edges.begin(), edges.end());
    for (int i = 0; i < n; ++i) {
        const Pair p(inner(rng), outer(rng));
        if (seen.insert(p).second) edges.push_back(p);
    }
    Instance inst;
    inst.problem = Problem::SplitGraph;
    inst.n = n;
    inst.samples.push_back({EdgeSet::from_pairs(std::move(edges)), 1});
    inst.samples.push_back({random_edges(rng, n, 2 * n), 0});
    inst.validate();
    return inst;
}

long long time_us(const Instance& inst, exec::Mode mode, Verdict& out) {
    SolveOptions options;
    options.exec_mode = mode;
    const auto start = std::chrono::steady_clock::now();
    out = solve(inst, options);
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void run(const char* label, const Instance& inst) {
    Verdict serial_verdict, parallel_verdict;
    const long long serial_us = time_us(inst, exec::Mode::Serial, serial_verdict);
    const long long parallel_us = time_us(inst, exec::Mode::Parallel, parallel_verdict);
    if (serial_verdict.is_found() != parallel_verdict.is_found()) {
        std::fprintf(stderr, "%s: serial and parallel verdicts disagree\n", label);
        std::exit(1);
    }
    const char* verdict = serial_verdict.is_found() ? "found" : "no-solution";
    std::printf("%s,%d,%zu,%d,serial,%lld,%s\n", label, inst.n, inst.samples.size(),
                inst.num_negative(), serial_us, verdict);
    std::printf("%s,%d,%zu,%d,parallel,%lld,%s\n", label, inst.n, inst.samples.size(),
                inst.num_negative(), parallel_us, verdict);
}

}  // namespace

int main() {
    std::printf("problem,n,t,tneg,solver,us,verdict\n");
    run("two-coloring", planted_two_coloring(1000, 2000, 2, 7));
    run("two-coloring", planted_two_coloring(4000, 8000, 2, 8));
    run("split-graph", planted_split(2000, 9));
    run("matching", planted_matching(120, 2, 2, 10));
    run("matching", planted_matching(200, 3, 2, 11));
    return 0;
}
