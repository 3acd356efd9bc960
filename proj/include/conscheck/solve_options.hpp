#pragma once

#include <cstdint>
#include <optional>

#include "conscheck/coloring_family.hpp"
#include "conscheck/exec.hpp"

namespace conscheck {

/// Knobs for the randomized solvers. Defaults give the standard trial count
/// and parallel scanning; results are deterministic for a fixed seed in both
/// execution modes.
struct SolveOptions {
    ColoringMode mode = ColoringMode::Random;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> trials;  // override the trial count in Random mode
    std::uint64_t exhaustive_cap = kDefaultExhaustiveCap;
    exec::Mode exec_mode = exec::Mode::Parallel;
};

}  // namespace conscheck
