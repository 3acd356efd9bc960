#pragma once

#include "conscheck/model.hpp"
#include "conscheck/solve_options.hpp"

namespace conscheck {

/// Routes an instance to the solver for its problem kind.
Verdict solve(const Instance& instance, const SolveOptions& options = {});

}  // namespace conscheck
