#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conscheck/model.hpp"
#include "conscheck/solve_options.hpp"

namespace conscheck {

/// A finite, explicit distribution over sample edge sets. Probabilities must
/// be nonnegative and sum to 1 within 1e-9.
struct SampleDistribution {
    std::vector<std::pair<EdgeSet, double>> support;

    /// Throws std::invalid_argument if probabilities are out of shape or any
    /// support edge set is invalid over n (or breaks the degree bound d).
    void validate(int n, std::optional<int> d) const;

    friend bool operator==(const SampleDistribution&, const SampleDistribution&) = default;
};

/// A learning scenario: the hidden target concept (a fixed solution), the
/// problem frame it lives in, and the distribution samples are drawn from.
struct Scenario {
    Problem problem = Problem::TwoColoring;
    int n = 0;
    std::optional<int> k;
    std::optional<int> d;
    Solution target = Solution::vset({});
    SampleDistribution dist;

    /// Validates the frame, the distribution, and that the target is a
    /// well-shaped solution for (problem, n, k, d).
    void validate() const;

    /// Label the target concept assigns to an edge set.
    bool target_label(const EdgeSet& edges) const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Sample count sufficient for an Occam-style consistent learner:
/// m = ceil((1/eps) * (ln|H| + ln(1/delta))), |H| given as log2.
/// Throws std::domain_error unless 0 < eps <= 1 and 0 < delta <= 1.
std::int64_t occam_sample_bound(double eps, double delta, double log2_hypothesis_count);

/// log2 of the hypothesis-class size used for the Occam bound:
/// 2^n vertex subsets (two-coloring, split-graph), C(n,k) vertex k-sets
/// (independent/dominating set), C(C(n,2),k) edge k-sets (matching, path),
/// C(2^n - n - 1, k) covers (k distinct vertex sets of size >= 2).
double log2_hypothesis_count(Problem problem, int n, std::optional<int> k);

/// Draws m labeled samples i.i.d. from the scenario's distribution, labeling
/// each edge set with the concept's verify outcome. Deterministic in rng.
std::vector<Sample> draw_labeled_samples(const Scenario& scenario, std::int64_t m,
                                         std::uint64_t seed);

/// Exact generalization error of a hypothesis: the probability mass of
/// support points where the hypothesis and the concept disagree.
double generalization_error(const Scenario& scenario, const Solution& hypothesis);

struct PacRun {
    std::int64_t samples_drawn = 0;
    int tneg = 0;        // negative samples in the drawn instance
    double err = 1.0;    // exact generalization error (1.0 when no hypothesis)
    bool found = false;  // solver produced a hypothesis
};

struct PacReport {
    double log2_h = 0.0;
    std::int64_t bound_m = 0;
    std::vector<PacRun> runs;

    /// Fraction of runs with err <= eps.
    double fraction_within(double eps) const;
};

/// Runs the consistency solver as a PAC learner: per run, draw
/// occam_sample_bound(...) samples, deduplicate identical labeled samples,
/// solve, and measure the exact generalization error of the hypothesis.
PacReport pac_learn(const Scenario& scenario, double eps, double delta, int runs,
                    std::uint64_t seed, const SolveOptions& options = {});

}  // namespace conscheck
