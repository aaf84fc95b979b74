#pragma once

#include <cstdint>
#include <vector>

#include "uavcover/exec.hpp"
#include "uavcover/model.hpp"

namespace uavcover {

// Which no-fly-zone refinement produced the solution.
enum class NfzCaseKind {
  None,       // unconstrained solution already legal
  LeftEdge,   // one UAV pinned to a zone's left edge
  RightEdge,  // one UAV pinned to a zone's right edge
  BothEdges,  // two neighbouring UAVs pinned to both edges
  Swept,      // multi-zone joint search (bisection over the greedy sweep)
};

struct NfzCase {
  NfzCaseKind kind = NfzCaseKind::None;
  int anchor_left_id = -1;   // UAV pinned at the left edge, if any
  int anchor_right_id = -1;  // UAV pinned at the right edge, if any
};

struct ColocatedSolution {
  std::vector<Placement> placements;  // ordered by x_final among deployed
  double bhat = 0.0;                  // bottleneck leftover
  NfzCase nfz_case;
  std::int64_t iterations = 0;
};

// Optimal deployment when every UAV starts at the same ground point, solving
// the equal-leftover tiling system by nested bisection. The common start may
// sit at either end of the interval or beyond it (handled by mirroring and a
// fixed approach offset). ignore_nfz solves the unconstrained system even
// when the scenario lists no-fly zones.
ColocatedSolution solve_equal_leftover(const Scenario& scenario, bool ignore_nfz);

// Refines an unconstrained solution whose placements violate a no-fly zone:
// with a single zone, tries every (edge case, anchor UAV) pair and keeps the
// best; with several zones, bisects the leftover target over the edge-aware
// greedy sweep. Returns the input unchanged when nothing violates.
ColocatedSolution refine_with_nfz(const ColocatedSolution& solution,
                                  const Scenario& scenario,
                                  ExecPolicy policy = ExecPolicy::Parallel);

// Full pipeline: equal-leftover solve plus refinement when zones interfere.
// A station strictly inside the interval splits it into two independent
// subproblems; the UAV partition between them is chosen exhaustively.
ColocatedSolution solve_colocated(const Scenario& scenario,
                                  ExecPolicy policy = ExecPolicy::Parallel);

SolveReport to_report(const ColocatedSolution& solution);

}  // namespace uavcover
