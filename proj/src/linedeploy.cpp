#include "uavcover/linedeploy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "uavcover/search.hpp"

namespace uavcover {

namespace {

// Altitude where the reach-window span is widest: r'(h) = 1/w. Below it the
// radius gain outpaces the horizontal cost, above it the reverse.
double window_peak_altitude(const CoverageModel& m) {
  return std::pow(m.alpha * m.beta * m.w, 1.0 / (1.0 - m.beta));
}

double window_left(const CoverageModel& m, const UavSpec& u, double budget, double h) {
  return u.x - (budget - h) / m.w - radius(m, h);
}

double window_right(const CoverageModel& m, const UavSpec& u, double budget, double h) {
  return u.x + (budget - h) / m.w + radius(m, h);
}

}  // namespace

std::pair<double, double> reach_window(const CoverageModel& m, const UavSpec& uav,
                                       double bhat, double h) {
  if (!(bhat < uav.battery))
    throw DomainError("reach_window: leftover target must be below the battery");
  if (!(h > 0.0) || h > m.h_star)
    throw DomainError("reach_window: altitude must be in (0, h_star]");
  const double budget = (uav.battery - bhat) / m.c;
  if (budget < h - 1e-12)
    throw DomainError("reach_window: budget cannot pay for the climb, window empty");
  const double clamped = std::max(budget, h);
  return {window_left(m, uav, clamped, h), window_right(m, uav, clamped, h)};
}

std::optional<MaxReach> max_reach(const CoverageModel& m, const UavSpec& uav,
                                  double bhat, double frontier,
                                  std::span<const Nfz> nfzs) {
  const double budget = (uav.battery - bhat) / m.c;
  const double h_max = std::min(m.h_star, budget);
  if (!(h_max > 0.0)) return std::nullopt;

  const double h_peak = std::clamp(window_peak_altitude(m), 0.0, h_max);
  auto left = [&](double h) { return window_left(m, uav, budget, h); };
  auto right = [&](double h) { return window_right(m, uav, budget, h); };

  // left() is V-shaped and right() is peaked, both turning at h_peak; the
  // frontier must lie inside [left(h), right(h)] for some h.
  if (left(h_peak) > frontier + tol::cover_slack) return std::nullopt;
  if (right(h_peak) < frontier - tol::cover_slack) return std::nullopt;

  double h_lo = 0.0, h_hi = h_max;
  if (left(0.0) > frontier)
    h_lo = std::max(h_lo, bisect_first_true(
                              [&](double h) { return left(h) <= frontier; }, 0.0,
                              h_peak, tol::altitude_abs));
  if (left(h_max) > frontier)
    h_hi = std::min(h_hi, bisect_last_true(
                              [&](double h) { return left(h) <= frontier; }, h_peak,
                              h_max, tol::altitude_abs));
  if (right(0.0) < frontier)
    h_lo = std::max(h_lo, bisect_first_true(
                              [&](double h) { return right(h) >= frontier; }, 0.0,
                              h_peak, tol::altitude_abs));
  if (right(h_max) < frontier)
    h_hi = std::min(h_hi, bisect_last_true(
                              [&](double h) { return right(h) >= frontier; },
                              h_peak, h_max, tol::altitude_abs));
  if (h_lo > h_hi) return std::nullopt;

  // Reach is min(touch branch, budget branch); unimodal on the window.
  auto reach_at = [&](double h) {
    return std::min(right(h), frontier + 2.0 * radius(m, h));
  };
  auto [h_best, reach_best] = golden_max(reach_at, h_lo, h_hi, tol::golden_xy);
  if (!(h_best > 0.0) || !(radius(m, h_best) > 0.0)) return std::nullopt;

  double x = std::min(uav.x + (budget - h_best) / m.w,
                      frontier + radius(m, h_best));
  double h = h_best;
  double reach = x + radius(m, h);

  for (const auto& z : nfzs) {
    if (!z.contains_strictly(x)) continue;
    // The unconstrained optimum sits inside a no-fly zone; by concavity the
    // constrained optimum pins to one of its edges with altitude re-maximized.
    bool found = false;
    double best_reach = 0.0, best_x = 0.0, best_h = 0.0;
    for (double edge : {z.left, z.right}) {
      const double he = std::min(m.h_star, budget - m.w * std::abs(edge - uav.x));
      if (!(he > 0.0)) continue;
      const double re = radius(m, he);
      if (edge - re > frontier + tol::cover_slack) continue;  // cannot touch
      if (!found || edge + re > best_reach) {
        found = true;
        best_reach = edge + re;
        best_x = edge;
        best_h = he;
      }
    }
    if (!found) return std::nullopt;
    x = best_x;
    h = best_h;
    reach = best_reach;
    break;
  }

  return MaxReach{x, h, reach};
}

SweepResult sweep_cover(const CoverageModel& m, std::span<const UavSpec> uavs,
                        std::span<const int> order, double bhat, double from,
                        double to, std::span<const Nfz> nfzs) {
  SweepResult result;
  result.placements.reserve(order.size());
  double frontier = from;
  for (int idx : order) {
    const UavSpec& u = uavs[idx];
    if (frontier >= to - tol::cover_slack) {
      result.placements.push_back(grounded_placement(u));
      continue;
    }
    const auto mr = max_reach(m, u, bhat, frontier, nfzs);
    if (mr && mr->reach > frontier) {
      result.placements.push_back(make_placement(m, u, mr->x, u.y, mr->h));
      frontier = mr->reach;
    } else {
      result.placements.push_back(grounded_placement(u));
    }
  }
  result.frontier = frontier;
  result.feasible = frontier >= to - tol::cover_slack;
  return result;
}

std::vector<int> base_order(const Scenario& scenario) {
  std::vector<int> order(scenario.uavs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ua = scenario.uavs[a];
    const auto& ub = scenario.uavs[b];
    if (ua.x != ub.x) return ua.x < ub.x;
    if (ua.battery != ub.battery) return ua.battery < ub.battery;
    return ua.id < ub.id;
  });
  return order;
}

FeasibilityOutcome check_feasible(const Scenario& scenario, double bhat) {
  scenario.validate();
  const auto order = base_order(scenario);
  auto sweep = sweep_cover(scenario.model, scenario.uavs, order, bhat, 0.0,
                           scenario.length, scenario.nfzs);
  FeasibilityOutcome out;
  out.feasible = sweep.feasible;
  out.frontier = sweep.frontier;
  if (sweep.feasible) out.placements = std::move(sweep.placements);
  return out;
}

SearchGrid search_bounds(const Scenario& scenario, double epsilon) {
  scenario.validate();
  const auto& m = scenario.model;
  const double n = static_cast<double>(scenario.uavs.size());
  double b_max = 0.0, b_min = std::numeric_limits<double>::infinity();
  for (const auto& u : scenario.uavs) {
    b_max = std::max(b_max, u.battery);
    b_min = std::min(b_min, u.battery);
  }

  // Upper bound: some UAV must hold a radius of at least L/(2n), which costs
  // at least the matching climb. When even r(h_star) falls short the instance
  // cannot be covered and the h_star climb is the defensible stand-in.
  const double half_width = scenario.length / (2.0 * n);
  double b_high;
  if (half_width <= m.max_radius())
    b_high = b_max - m.c * inverse_radius(m, half_width);
  else
    b_high = b_max - m.c * m.h_star;
  b_high = std::max(b_high, tol::b_low_floor);
  b_high = std::min(b_high, b_max);

  // Lower bound: the best single-UAV cover (climb in place over the farther
  // end) with everyone else grounded, maximized over UAVs.
  double b_low = 0.0;
  for (std::size_t i = 0; i < scenario.uavs.size(); ++i) {
    const auto& u = scenario.uavs[i];
    const double span = std::max(std::abs(u.x), std::abs(scenario.length - u.x));
    if (span > m.max_radius()) continue;
    double value = u.battery - m.c * (m.w * span + inverse_radius(m, span));
    for (std::size_t j = 0; j < scenario.uavs.size(); ++j)
      if (j != i) value = std::min(value, scenario.uavs[j].battery);
    b_low = std::max(b_low, value);
  }
  if (b_low <= 0.0) b_low = tol::b_low_floor;
  b_low = std::min(b_low, b_high);

  return SearchGrid{b_low, b_high, epsilon};
}

SolveReport solve_fixed_order(const Scenario& scenario, std::span<const int> order,
                              double epsilon, const SearchGrid* grid_in) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw InputError("epsilon: must be in (0, 1)");
  scenario.validate();
  const auto t0 = std::chrono::steady_clock::now();

  SearchGrid grid = grid_in ? *grid_in : search_bounds(scenario);
  grid.epsilon = epsilon;
  const std::int64_t k_max = std::max<std::int64_t>(grid.steps(), 1);

  SolveReport report;
  report.diagnostics.epsilon = epsilon;
  const std::int64_t k = largest_true_index(
      [&](std::int64_t idx) {
        return sweep_cover(scenario.model, scenario.uavs, order, grid.at(idx),
                           0.0, scenario.length, scenario.nfzs)
            .feasible;
      },
      k_max, &report.diagnostics.probes);
  if (k == 0)
    throw InfeasibleError("solve: swarm cannot cover the target even at the "
                          "lowest leftover grid point");

  auto sweep = sweep_cover(scenario.model, scenario.uavs, order, grid.at(k), 0.0,
                           scenario.length, scenario.nfzs);
  report.placements = std::move(sweep.placements);
  report.bhat = bottleneck_leftover(report.placements);
  report.diagnostics.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

SolveReport solve_line(const Scenario& scenario, double epsilon) {
  const auto order = base_order(scenario);
  return solve_fixed_order(scenario, order, epsilon);
}

}  // namespace uavcover
