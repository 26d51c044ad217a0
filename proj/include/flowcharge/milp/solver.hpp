#pragma once

#include "flowcharge/milp/model.hpp"

namespace flowcharge::milp {

/// Deterministic LP-based branch and bound.
///
/// Nodes are taken best-bound first with FIFO ties; the branching variable is
/// the most fractional integer column of the highest priority, ties by
/// smallest id, and the down child is queued before the up child. Every LP is
/// warm-started from the parent's final basis. Until an incumbent exists, a
/// rounding dive runs at the root and every 200 nodes. Throws ModelError for
/// a model without variables.
Solution solve(const Model& model, const SolveLimits& limits = {});

/// Continuous relaxation; the objective is a bound on the MILP optimum.
Solution lp_relax(const Model& model);

}  // namespace flowcharge::milp
