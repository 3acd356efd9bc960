#pragma once

#include "conscheck/exec.hpp"
#include "conscheck/model.hpp"

namespace conscheck {

/// Consistency solver for proper 2-colorings, parameterized by the number of
/// negative samples.
///
/// The union of the positive samples fixes, per connected component, a
/// bipartition (up to swapping the two sides); a candidate X is described by
/// one bit per component. Each negative sample reduces to its signature: the
/// set of side-class pairs its edges connect. A signature pair can be made
/// monochromatic unless it joins the two sides of one component, so those
/// pairs are dropped; a sample whose signature loses all pairs can never be
/// violated and forces NoSolution.
///
/// Small signatures (at most 16 * (#negatives)^2 usable pairs) are branched
/// over exhaustively; a larger signature necessarily spans more than
/// 2 * #negatives components, so a pair touching a still-unconstrained
/// component always exists and is constrained greedily. Constraints are
/// propagated through a parity forest, and every returned X is re-checked
/// against the whole instance.
Verdict solve_two_coloring(const Instance& instance, exec::Mode mode = exec::Mode::Parallel);

}  // namespace conscheck
