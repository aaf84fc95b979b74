#pragma once

#include <utility>
#include <vector>

#include "uavcover/model.hpp"

namespace uavcover {

struct Station {
  double x = 0.0;
  double y = 0.0;
};

// Two-station deployment: UAVs launch from the left/right stations in the
// ground plane and cover the x-axis interval [0, L] through disk chords.
struct Scenario3d {
  double length = 0.0;
  Station station_left;
  Station station_right;
  std::vector<UavSpec> left_uavs;   // battery-ascending
  std::vector<UavSpec> right_uavs;  // battery-descending
  std::vector<Nfz> nfzs;
  CoverageModel model;

  void validate() const;
};

// Half-length of the ground-line segment covered by a disk of radius r(h)
// whose center sits y_offset off the line. Throws DomainError for an empty
// chord (|y_offset| > r(h)).
double chord(const CoverageModel& m, double h, double y_offset);

// Leftmost and rightmost target points reachable from `station` with bhat
// leftover at altitude h and lateral offset y_offset.
std::pair<double, double> reach_window_3d(const CoverageModel& m,
                                          const UavSpec& uav,
                                          const Station& station, double bhat,
                                          double h, double y_offset);

// Grid binary search with two opposing greedy sweeps; placements come back in
// non-crossing x order (left fleet first, then the right fleet).
SolveReport solve_3d(const Scenario3d& scenario, double epsilon);

}  // namespace uavcover
