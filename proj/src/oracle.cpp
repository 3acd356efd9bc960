#include "conscheck/oracle.hpp"

#include <bit>

#include "conscheck/numeric.hpp"

namespace conscheck {

BudgetExceeded::BudgetExceeded(std::uint64_t c, std::uint64_t b)
    : std::runtime_error("candidate count " +
                         (c == kSaturated ? std::string("(overflow)") : std::to_string(c)) +
                         " exceeds oracle budget " + std::to_string(b)),
      count(c),
      budget(b) {}

namespace {

// Lexicographically r-th k-subset of [0, pool).
std::vector<int> unrank_combination(std::uint64_t pool, int k, std::uint64_t r) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    std::uint64_t a = 0;
    for (int i = 0; i < k; ++i) {
        for (;;) {
            std::uint64_t c = sat_binom(pool - a - 1, static_cast<std::uint64_t>(k - i - 1));
            if (r < c) break;
            r -= c;
            ++a;
        }
        out.push_back(static_cast<int>(a));
        ++a;
    }
    return out;
}

std::vector<VertexId> bits_to_vertices(std::uint64_t mask) {
    std::vector<VertexId> out;
    while (mask) {
        int b = std::countr_zero(mask);
        out.push_back(b);
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

CandidateEnumerator::CandidateEnumerator(const Instance& instance)
    : problem_(instance.problem), n_(instance.n), k_(instance.k.value_or(0)) {
    std::uint64_t n = static_cast<std::uint64_t>(n_);
    std::uint64_t k = static_cast<std::uint64_t>(k_);
    switch (problem_) {
        case Problem::TwoColoring:
        case Problem::SplitGraph:
            count_ = sat_pow(2, n);
            break;
        case Problem::IndependentSetDeg:
        case Problem::DominatingSetDeg:
            count_ = sat_binom(n, k);
            break;
        case Problem::Matching:
        case Problem::Path:
            count_ = sat_binom(n * (n - 1) / 2, k);
            break;
        case Problem::EdgeCliqueCover: {
            std::uint64_t pool =
                n >= 64 ? kSaturated : (std::uint64_t{1} << n) - n - 1;  // subsets of size >= 2
            count_ = sat_binom(pool, k);
            break;
        }
    }
}

void CandidateEnumerator::materialize() {
    if (materialized_) return;
    if (problem_ == Problem::Matching || problem_ == Problem::Path) {
        if (k_ > 0)
            for (int u = 0; u < n_; ++u)
                for (int v = u + 1; v < n_; ++v) pair_pool_.emplace_back(u, v);
    } else if (problem_ == Problem::EdgeCliqueCover) {
        if (k_ > 0) {
            if (n_ >= 26) throw std::length_error("cover member pool too large to materialize");
            std::uint64_t top = std::uint64_t{1} << n_;
            for (std::uint64_t mask = 0; mask < top; ++mask)
                if (std::popcount(mask) >= 2) member_pool_.push_back(mask);
        }
    }
    materialized_ = true;
}

Solution CandidateEnumerator::at(std::uint64_t index) const {
    switch (problem_) {
        case Problem::TwoColoring:
        case Problem::SplitGraph:
            return Solution::vset(bits_to_vertices(index));
        case Problem::IndependentSetDeg:
        case Problem::DominatingSetDeg: {
            auto combo = unrank_combination(static_cast<std::uint64_t>(n_), k_, index);
            return Solution::vset({combo.begin(), combo.end()});
        }
        case Problem::Matching:
        case Problem::Path: {
            auto combo = unrank_combination(static_cast<std::uint64_t>(pair_pool_.size()), k_, index);
            std::vector<Pair> pairs;
            pairs.reserve(combo.size());
            for (int i : combo) pairs.push_back(pair_pool_[static_cast<std::size_t>(i)]);
            return Solution::pset(std::move(pairs));
        }
        case Problem::EdgeCliqueCover: {
            auto combo = unrank_combination(static_cast<std::uint64_t>(member_pool_.size()), k_, index);
            std::vector<std::vector<VertexId>> members;
            members.reserve(combo.size());
            for (int i : combo) members.push_back(bits_to_vertices(member_pool_[static_cast<std::size_t>(i)]));
            return Solution::cover(std::move(members));
        }
    }
    throw std::logic_error("unreachable");
}

Verdict oracle_solve(const Instance& instance, std::uint64_t budget, exec::Mode mode) {
    instance.validate();
    CandidateEnumerator en(instance);
    if (en.count() > budget) throw BudgetExceeded(en.count(), budget);
    en.materialize();
    auto hit = exec::find_first(en.count(), mode,
                                [&](std::uint64_t i) { return is_consistent(instance, en.at(i)); });
    if (!hit) return Verdict::no_solution();
    return Verdict::found(en.at(*hit));
}

}  // namespace conscheck
