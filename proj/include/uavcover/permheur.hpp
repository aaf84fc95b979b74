#pragma once

#include <span>
#include <vector>

#include "uavcover/exec.hpp"
#include "uavcover/linedeploy.hpp"
#include "uavcover/model.hpp"

namespace uavcover {

// All deployment orders obtained from `base` by permuting the occupants of
// some kappa-subset of slots, deduplicated and sorted. kappa = 0 yields just
// the base order; kappa = n yields every permutation.
std::vector<std::vector<int>> enumerate_orders(int n, int kappa,
                                               std::span<const int> base);

// Order-relaxation heuristic for UAVs with distinct initial locations and
// batteries: runs the fixed-order grid search on every enumerated order and
// keeps the best leftover. The returned value is nondecreasing in kappa.
SolveReport solve_kappa(const Scenario& scenario, int kappa, double epsilon,
                        ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace uavcover
