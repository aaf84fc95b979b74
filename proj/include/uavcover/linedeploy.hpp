#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uavcover/model.hpp"

namespace uavcover {

// Outcome of one feasibility check at a fixed leftover target.
struct FeasibilityOutcome {
  bool feasible = false;
  std::vector<Placement> placements;  // meaningful only when feasible
  double frontier = 0.0;              // furthest covered point reached
};

// Search grid over candidate leftover values: {k * epsilon * b_low}.
struct SearchGrid {
  double b_low = 0.0;
  double b_high = 0.0;
  double epsilon = 0.0;

  std::int64_t steps() const {
    return static_cast<std::int64_t>(std::ceil(b_high / (epsilon * b_low)));
  }
  double at(std::int64_t k) const { return static_cast<double>(k) * epsilon * b_low; }
};

// Leftmost and rightmost target points a UAV can cover while keeping bhat
// leftover at altitude h. Throws DomainError when the energy budget cannot
// even pay for the climb.
std::pair<double, double> reach_window(const CoverageModel& m, const UavSpec& uav,
                                       double bhat, double h);

struct MaxReach {
  double x = 0.0;      // final ground position
  double h = 0.0;      // service altitude
  double reach = 0.0;  // rightmost covered point, x + r(h)
};

// Best placement extending coverage past `frontier` while keeping bhat
// leftover and avoiding the open no-fly intervals. nullopt when no placement
// can touch the frontier.
std::optional<MaxReach> max_reach(const CoverageModel& m, const UavSpec& uav,
                                  double bhat, double frontier,
                                  std::span<const Nfz> nfzs);

// Greedy left-to-right sweep: processes UAVs in the given index order,
// placing each at its frontier-maximal position; covers [from, to].
struct SweepResult {
  bool feasible = false;
  double frontier = 0.0;
  std::vector<Placement> placements;  // one per UAV in `order`, grounded if unused
};
SweepResult sweep_cover(const CoverageModel& m, std::span<const UavSpec> uavs,
                        std::span<const int> order, double bhat, double from,
                        double to, std::span<const Nfz> nfzs);

// Feasibility of target leftover bhat for the whole scenario; UAVs are
// processed in ascending initial-x order (battery, then id, break ties).
FeasibilityOutcome check_feasible(const Scenario& scenario, double bhat);

// Search bounds for the leftover binary search.
SearchGrid search_bounds(const Scenario& scenario, double epsilon = 0.0);

// Index order sorted by (x, battery, id); the deployment order preserved by
// the sweep.
std::vector<int> base_order(const Scenario& scenario);

// Grid binary search over a fixed deployment order. Shared engine behind
// solve_line and the permutation heuristic.
SolveReport solve_fixed_order(const Scenario& scenario, std::span<const int> order,
                              double epsilon, const SearchGrid* grid = nullptr);

// (1 - epsilon)-approximate solve for UAVs at distinct initial locations.
// Optimal for equal batteries; for unequal batteries the order-preserving
// sweep is a heuristic and callers wanting better go through solve_kappa.
SolveReport solve_line(const Scenario& scenario, double epsilon);

}  // namespace uavcover
