#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "uavcover/errors.hpp"

namespace uavcover {

// Solver-wide numeric tolerances. Units: km for lengths, Wh for energy.
// Mutable so the CLI can surface them as flags; set before solving, never
// from concurrent contexts.
namespace tol {
inline double altitude_abs = 1e-9;   // bisection on altitudes
inline double energy_abs = 1e-9;     // bisection on leftover energy
// Golden-section tolerances sit well below the energy grid so that the
// placement search never dominates cross-engine agreement (1 km of ground
// motion costs c * w ~ 4.3 Wh with the default model).
inline double golden_xy = 1e-8;      // golden-section, planar reach
inline double golden_3d = 1e-7;      // golden-section, 3D reach
inline constexpr double seam = 1e-6;         // allowed coverage gap/overlap
inline constexpr double cover_slack = 1e-9;  // frontier-vs-target slack
inline double b_low_floor = 1e-3;    // Wh, fallback search lower bound
inline constexpr int max_bisect_iters = 200;
}  // namespace tol

// Physical model shared by all solvers: coverage radius grows as
// alpha * h^beta up to the turning-point altitude h_star, a flight of
// normalized length d = w * ground_distance + climb costs c * d Wh.
struct CoverageModel {
  double alpha = 1.0;   // radius coefficient, km^(1-beta)
  double beta = 0.5;    // radius exponent, in (0, 1)
  double h_star = 2.0;  // turning-point altitude, km
  double w = 0.2;       // horizontal distance weight, in (0, 1)
  double c = 21.6;      // energy per normalized km, Wh/km

  void validate() const;

  // Largest achievable coverage radius, r(h_star).
  double max_radius() const { return alpha * std::pow(h_star, beta); }
};

struct UavSpec {
  int id = 0;
  double x = 0.0;        // initial ground x, km
  double y = 0.0;        // initial ground y, km (0 in 1D scenarios)
  double battery = 0.0;  // initial energy storage, Wh
};

// Ground interval where no UAV may end up. Overflight is allowed.
struct Nfz {
  double left = 0.0;
  double right = 0.0;

  bool contains_strictly(double x, double eps = 1e-9) const {
    return x > left + eps && x < right - eps;
  }
};

struct Scenario {
  double length = 0.0;  // target interval [0, length]
  std::vector<Nfz> nfzs;
  std::vector<UavSpec> uavs;
  CoverageModel model;

  void validate() const;
};

// Final state of one UAV after the solve.
struct Placement {
  int uav_id = 0;
  double x_final = 0.0;
  double y_final = 0.0;
  double altitude = 0.0;
  double radius = 0.0;    // r(altitude)
  double distance = 0.0;  // normalized travel distance
  double leftover = 0.0;  // battery - c * distance
  bool deployed = false;
};

struct SolveDiagnostics {
  double epsilon = 0.0;
  std::int64_t iterations = 0;  // bisection iterations
  std::int64_t probes = 0;      // feasibility checks / enumerated candidates
  double wall_ms = 0.0;
};

struct SolveReport {
  std::vector<Placement> placements;
  double bhat = 0.0;  // bottleneck (minimum) leftover over all UAVs
  SolveDiagnostics diagnostics;
};

// Coverage radius at altitude h. Defined on [0, h_star] only; flying higher
// never enlarges coverage, so the solvers never ask for it.
double radius(const CoverageModel& m, double h);

// Altitude achieving radius r, inverse of radius(). Throws UncoverableError
// when r exceeds max_radius().
double inverse_radius(const CoverageModel& m, double r);

// Normalized travel distance: w * euclidean ground distance + climb.
double travel_distance(const CoverageModel& m, double from_x, double from_y,
                       double to_x, double to_y, double h);

// Energy left after flying the given normalized distance. May be negative;
// callers treat negative as infeasible.
double leftover(const CoverageModel& m, double battery, double distance);

// Builds a fully populated deployed placement from a final position.
Placement make_placement(const CoverageModel& m, const UavSpec& uav, double x,
                         double y, double h);

// Placement for a UAV that never moves.
Placement grounded_placement(const UavSpec& uav);

// Minimum leftover over all placements; the solve objective.
double bottleneck_leftover(const std::vector<Placement>& placements);

}  // namespace uavcover
