#include "conscheck/pacsim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "conscheck/numeric.hpp"
#include "conscheck/solve.hpp"

namespace conscheck {

void SampleDistribution::validate(int n, std::optional<int> d) const {
    if (support.empty()) throw std::invalid_argument("distribution support is empty");
    double sum = 0.0;
    for (const auto& [edges, prob] : support) {
        if (!(prob >= 0.0)) throw std::invalid_argument("distribution probability must be >= 0");
        sum += prob;
        if (edges.max_vertex() >= n)
            throw std::invalid_argument("distribution support edge endpoint out of range");
        if (d && edges.max_degree(n) > *d)
            throw std::invalid_argument("distribution support violates the degree bound");
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("distribution probabilities must sum to 1");
}

void Scenario::validate() const {
    if (n < 1) throw std::invalid_argument("scenario requires n >= 1");
    if (problem_has_k(problem)) {
        if (!k) throw std::invalid_argument("scenario requires parameter k");
        if (*k < 0) throw std::invalid_argument("parameter k must be >= 0");
    } else if (k) {
        throw std::invalid_argument("problem " + problem_name(problem) + " does not take k");
    }
    if (problem_has_d(problem)) {
        if (!d) throw std::invalid_argument("scenario requires parameter d");
        if (*d < 0) throw std::invalid_argument("parameter d must be >= 0");
    } else if (d) {
        throw std::invalid_argument("problem " + problem_name(problem) + " does not take d");
    }
    dist.validate(n, d);

    switch (problem) {
        case Problem::TwoColoring:
        case Problem::SplitGraph:
        case Problem::IndependentSetDeg:
        case Problem::DominatingSetDeg: {
            if (!target.is_vset()) throw std::invalid_argument("target must be a vertex set");
            const auto& vs = target.vertices();
            if (!vs.empty() && vs.back() >= n)
                throw std::invalid_argument("target vertex out of range");
            if (k && static_cast<int>(vs.size()) != *k)
                throw std::invalid_argument("target vertex set must have size k");
            break;
        }
        case Problem::Matching:
        case Problem::Path: {
            if (!target.is_pset()) throw std::invalid_argument("target must be a pair set");
            // Checking the target against its own edge set validates exactly
            // the shape: size k plus matching disjointness / path form.
            if (!verify(problem, target, EdgeSet::from_pairs(target.pairs()), n, k, d))
                throw std::invalid_argument("target is not a well-shaped solution");
            break;
        }
        case Problem::EdgeCliqueCover: {
            if (!target.is_cover()) throw std::invalid_argument("target must be a cover");
            std::vector<Pair> all;
            for (const auto& member : target.members()) {
                auto ps = cover_member_pairs(member);
                all.insert(all.end(), ps.begin(), ps.end());
            }
            if (!verify(problem, target, EdgeSet::from_pairs(all), n, k, d))
                throw std::invalid_argument("target is not a well-shaped cover");
            break;
        }
    }
}

bool Scenario::target_label(const EdgeSet& edges) const {
    return verify(problem, target, edges, n, k, d);
}

std::int64_t occam_sample_bound(double eps, double delta, double log2_hypothesis_count) {
    if (!(eps > 0.0) || eps > 1.0) throw std::domain_error("eps must lie in (0, 1]");
    if (!(delta > 0.0) || delta > 1.0) throw std::domain_error("delta must lie in (0, 1]");
    if (!(log2_hypothesis_count >= 0.0))
        throw std::domain_error("hypothesis count must be >= 1");
    const double ln_h = log2_hypothesis_count * std::log(2.0);
    const double raw = (ln_h + std::log(1.0 / delta)) / eps;
    if (raw > 1e15) throw std::overflow_error("sample bound too large");
    return static_cast<std::int64_t>(std::ceil(raw));
}

namespace {

double log2_binom(double pool, int k) {
    if (k < 0 || static_cast<double>(k) > pool)
        throw std::invalid_argument("empty hypothesis class");
    if (k == 0) return 0.0;
    return (std::lgamma(pool + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
            std::lgamma(pool - static_cast<double>(k) + 1.0)) /
           std::log(2.0);
}

}  // namespace

double log2_hypothesis_count(Problem problem, int n, std::optional<int> k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    switch (problem) {
        case Problem::TwoColoring:
        case Problem::SplitGraph: return static_cast<double>(n);
        case Problem::IndependentSetDeg:
        case Problem::DominatingSetDeg:
            if (!k) throw std::invalid_argument("k required");
            return log2_binom(static_cast<double>(n), *k);
        case Problem::Matching:
        case Problem::Path:
            if (!k) throw std::invalid_argument("k required");
            return log2_binom(static_cast<double>(n) * (n - 1) / 2.0, *k);
        case Problem::EdgeCliqueCover:
            if (!k) throw std::invalid_argument("k required");
            return log2_binom(std::pow(2.0, n) - n - 1.0, *k);
    }
    throw std::logic_error("unknown problem kind");
}

std::vector<Sample> draw_labeled_samples(const Scenario& scenario, std::int64_t m,
                                         std::uint64_t seed) {
    if (m < 0) throw std::invalid_argument("sample count must be >= 0");
    std::mt19937_64 rng(seed);
    std::vector<Sample> out;
    out.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double cum = 0.0;
        std::size_t pick = scenario.dist.support.size() - 1;
        for (std::size_t i = 0; i < scenario.dist.support.size(); ++i) {
            cum += scenario.dist.support[i].second;
            if (u < cum) {
                pick = i;
                break;
            }
        }
        const EdgeSet& edges = scenario.dist.support[pick].first;
        out.push_back({edges, scenario.target_label(edges) ? 1 : 0});
    }
    return out;
}

double generalization_error(const Scenario& scenario, const Solution& hypothesis) {
    double err = 0.0;
    for (const auto& [edges, prob] : scenario.dist.support) {
        const bool want = scenario.target_label(edges);
        const bool got = verify(scenario.problem, hypothesis, edges, scenario.n, scenario.k,
                                scenario.d);
        if (want != got) err += prob;
    }
    return err;
}

double PacReport::fraction_within(double eps) const {
    if (runs.empty()) return 0.0;
    std::size_t hits = 0;
    for (const PacRun& run : runs)
        if (run.err <= eps) ++hits;
    return static_cast<double>(hits) / static_cast<double>(runs.size());
}

PacReport pac_learn(const Scenario& scenario, double eps, double delta, int runs,
                    std::uint64_t seed, const SolveOptions& options) {
    scenario.validate();
    if (runs < 1) throw std::invalid_argument("need at least one run");

    PacReport report;
    report.log2_h = log2_hypothesis_count(scenario.problem, scenario.n, scenario.k);
    report.bound_m = occam_sample_bound(eps, delta, report.log2_h);

    for (int r = 0; r < runs; ++r) {
        const std::uint64_t run_seed =
            mix64(seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(r) + 1));
        std::vector<Sample> drawn = draw_labeled_samples(scenario, report.bound_m, run_seed);

        Instance inst;
        inst.problem = scenario.problem;
        inst.n = scenario.n;
        inst.k = scenario.k;
        inst.d = scenario.d;
        std::set<EdgeSet> seen;
        for (Sample& s : drawn)
            if (seen.insert(s.edges).second) inst.samples.push_back(std::move(s));

        PacRun run;
        run.samples_drawn = report.bound_m;
        run.tneg = inst.num_negative();
        Verdict verdict = solve(inst, options);
        if (verdict.is_found()) {
            run.found = true;
            run.err = generalization_error(scenario, *verdict.solution);
        }
        report.runs.push_back(run);
    }
    return report;
}

}  // namespace conscheck
