#pragma once

#include <span>

#include "uavcover/exec.hpp"
#include "uavcover/model.hpp"

namespace uavcover {

// Discretization used by the brute-force oracle.
struct GridSpec {
  double dx = 1e-3;  // ground grid step, km
  double dh = 1e-3;  // altitude grid step, km

  void validate() const {
    if (!(dx > 0.0)) throw InputError("grid.dx: must be > 0");
    if (!(dh > 0.0)) throw InputError("grid.dh: must be > 0");
  }
};

// Exhaustive ground-truth optimizer over discretized placements. Enumerates
// every per-UAV (x, h) pair on the grid (no-fly edges and interval endpoints
// added, stay-grounded included) and maximizes the minimum leftover over all
// covering assignments. Independent of the solver code paths on purpose.
// Result trails the true optimum by at most c * (w * dx + dh).
SolveReport brute_force(const Scenario& scenario, const GridSpec& grid,
                        ExecPolicy policy = ExecPolicy::Parallel);

// Adversarial scenario built from a multiset of positive integers: a
// deployment keeping `bhat` everywhere exists iff the integers split into two
// halves of equal sum. Two no-fly zones flank the midpoint, one low-budget
// UAV is tuned to plug the middle gap, and each integer becomes a UAV whose
// battery affords exactly its tile plus a horizontal allowance.
Scenario partition_scenario(std::span<const int> ints, double bhat);

}  // namespace uavcover
