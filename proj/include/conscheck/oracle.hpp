#pragma once

#include <cstdint>

#include "conscheck/exec.hpp"
#include "conscheck/model.hpp"

namespace conscheck {

struct BudgetExceeded : std::runtime_error {
    std::uint64_t count;
    std::uint64_t budget;
    BudgetExceeded(std::uint64_t c, std::uint64_t b);
};

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Index-addressable stream of all candidate solutions of an instance, in a
/// fixed deterministic order:
///  - vertex subsets (two-coloring, split-graph): increasing bitmask value;
///  - k-vertex subsets (independent/dominating set): lexicographic;
///  - k-pair subsets (matching, path): lexicographic over the lex-sorted
///    pair list (0,1) < (0,2) < ... < (n-2,n-1);
///  - covers: k-combinations, in lexicographic order, of the pool of vertex
///    sets of size >= 2 listed by increasing bitmask value.
class CandidateEnumerator {
  public:
    explicit CandidateEnumerator(const Instance& instance);

    std::uint64_t count() const { return count_; }  // saturating
    /// Builds lookup pools. Call once before at(); requires count() to be
    /// small enough to enumerate.
    void materialize();
    Solution at(std::uint64_t index) const;

  private:
    Problem problem_;
    int n_ = 0;
    int k_ = 0;
    std::uint64_t count_ = 0;
    bool materialized_ = false;
    std::vector<Pair> pair_pool_;
    std::vector<std::uint64_t> member_pool_;  // cover members as bitmasks
};

/// Exhaustive reference solver: first consistent candidate in enumeration
/// order, or NoSolution. Throws BudgetExceeded when the candidate count
/// exceeds the budget.
Verdict oracle_solve(const Instance& instance, std::uint64_t budget = kDefaultOracleBudget,
                     exec::Mode mode = exec::Mode::Parallel);

}  // namespace conscheck
