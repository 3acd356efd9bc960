#include "conscheck/solve.hpp"

#include <stdexcept>

#include "conscheck/clique_cover.hpp"
#include "conscheck/edge_solvers.hpp"
#include "conscheck/split.hpp"
#include "conscheck/two_coloring.hpp"
#include "conscheck/vertex_solvers.hpp"

namespace conscheck {

Verdict solve(const Instance& instance, const SolveOptions& options) {
    switch (instance.problem) {
        case Problem::TwoColoring: return solve_two_coloring(instance, options.exec_mode);
        case Problem::SplitGraph: return solve_split(instance, options.exec_mode);
        case Problem::Matching: return solve_matching(instance, options);
        case Problem::Path: return solve_path(instance, options);
        case Problem::EdgeCliqueCover: return solve_clique_cover(instance);
        case Problem::IndependentSetDeg: return solve_independent_set(instance, options);
        case Problem::DominatingSetDeg: return solve_dominating_set(instance, options.exec_mode);
    }
    throw std::logic_error("unknown problem kind");
}

}  // namespace conscheck
