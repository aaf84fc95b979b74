#include "uavcover/deploy3d.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>

#include "uavcover/linedeploy.hpp"
#include "uavcover/search.hpp"

namespace uavcover {

namespace {

constexpr double kInvalid = -1e300;

struct Reach3d {
  double x = 0.0;
  double y = 0.0;
  double h = 0.0;
  double reach = 0.0;  // rightmost covered x, x + chord
};

// Best rightward extension from `frontier` for one UAV launched at `station`.
// Jointly maximizes x' + chord over altitude and lateral offset; the lateral
// offset is only ever useful between the station's y and the target line.
std::optional<Reach3d> max_reach_rightward(const CoverageModel& m,
                                           const Station& station,
                                           double battery, double bhat,
                                           double frontier,
                                           std::span<const Nfz> nfzs) {
  const double budget = (battery - bhat) / m.c;
  const double h_max = std::min(m.h_star, budget);
  if (!(h_max > 0.0)) return std::nullopt;

  auto y_interval = [&](double h, double* ylo, double* yhi) -> bool {
    const double r = radius(m, h);
    const double rho_g = (budget - h) / m.w;
    double lo = std::max({std::min(0.0, station.y), -r, station.y - rho_g});
    double hi = std::min({std::max(0.0, station.y), r, station.y + rho_g});
    if (lo > hi) return false;
    *ylo = lo;
    *yhi = hi;
    return true;
  };

  auto reach_at = [&](double h, double y) -> double {
    const double r = radius(m, h);
    const double rho_g = (budget - h) / m.w;
    const double q = std::sqrt(std::max(0.0, r * r - y * y));
    const double dy = y - station.y;
    const double rho_x = std::sqrt(std::max(0.0, rho_g * rho_g - dy * dy));
    if (station.x - rho_x > frontier + q + tol::cover_slack)
      return kInvalid + (frontier + q + rho_x - station.x);  // cannot touch
    return std::min(station.x + rho_x, frontier + q) + q;
  };

  auto best_over_y = [&](double h) -> std::pair<double, double> {  // (value, y)
    double ylo, yhi;
    if (!y_interval(h, &ylo, &yhi)) return {kInvalid * 2.0, 0.0};
    auto [y, v] = sampled_golden_max([&](double yy) { return reach_at(h, yy); },
                                     ylo, yhi, 16, tol::golden_3d);
    return {v, y};
  };

  auto [h_best, v_best] = sampled_golden_max(
      [&](double h) { return best_over_y(h).first; },
      std::min(h_max, 1e-9), h_max, 32, tol::golden_3d);
  if (v_best <= kInvalid / 2.0) return std::nullopt;
  const double y_best = best_over_y(h_best).second;

  const double r = radius(m, h_best);
  const double rho_g = (budget - h_best) / m.w;
  const double q = std::sqrt(std::max(0.0, r * r - y_best * y_best));
  const double dy = y_best - station.y;
  const double rho_x = std::sqrt(std::max(0.0, rho_g * rho_g - dy * dy));
  double x = std::min(station.x + rho_x, frontier + q);

  for (const auto& z : nfzs) {
    if (!z.contains_strictly(x)) continue;
    // Pin to a zone edge and re-maximize the chord there.
    bool found = false;
    Reach3d best{};
    for (double edge : {z.left, z.right}) {
      auto chord_at = [&](double h) -> std::pair<double, double> {  // (q, y)
        const double rr = radius(m, h);
        const double rg = (budget - h) / m.w;
        const double dx = edge - station.x;
        if (rg * rg < dx * dx) return {kInvalid, 0.0};
        const double t = std::sqrt(rg * rg - dx * dx);
        double ylo = std::max({std::min(0.0, station.y), -rr, station.y - t});
        double yhi = std::min({std::max(0.0, station.y), rr, station.y + t});
        if (ylo > yhi) return {kInvalid, 0.0};
        const double y = std::clamp(0.0, ylo, yhi);
        return {std::sqrt(std::max(0.0, rr * rr - y * y)), y};
      };
      auto [he, qe] = sampled_golden_max(
          [&](double h) { return chord_at(h).first; },
          std::min(h_max, 1e-9), h_max, 32, tol::golden_3d);
      if (qe <= kInvalid / 2.0) continue;
      if (edge - qe > frontier + tol::cover_slack) continue;  // cannot touch
      if (!found || edge + qe > best.reach) {
        found = true;
        best = {edge, chord_at(he).second, he, edge + qe};
      }
    }
    if (!found) return std::nullopt;
    return best;
  }

  return Reach3d{x, y_best, h_best, x + q};
}

// Leftward extension implemented by mirroring x across 0.
std::optional<Reach3d> max_reach_leftward(const CoverageModel& m,
                                          const Station& station,
                                          double battery, double bhat,
                                          double frontier,
                                          std::span<const Nfz> mirrored_nfzs) {
  const Station mirrored{-station.x, station.y};
  auto r = max_reach_rightward(m, mirrored, battery, bhat, -frontier,
                               mirrored_nfzs);
  if (!r) return std::nullopt;
  return Reach3d{-r->x, r->y, r->h, -r->reach};  // reach is the leftmost covered x
}

struct SweepState {
  double frontier_left = 0.0;
  double frontier_right = 0.0;
  std::vector<Placement> left_placements;
  std::vector<Placement> right_placements;  // rightmost-first
  bool feasible = false;
};

SweepState run_sweeps(const Scenario3d& s, std::span<const UavSpec> left_asc,
                      std::span<const UavSpec> right_asc, double bhat,
                      std::span<const Nfz> mirrored_nfzs) {
  SweepState state;
  state.frontier_left = 0.0;
  state.frontier_right = s.length;

  for (const auto& u : left_asc) {
    if (state.frontier_left >= s.length - tol::cover_slack) {
      state.left_placements.push_back(grounded_placement(u));
      continue;
    }
    auto mr = max_reach_rightward(s.model, s.station_left, u.battery, bhat,
                                  state.frontier_left, s.nfzs);
    if (mr && mr->reach > state.frontier_left) {
      state.left_placements.push_back(make_placement(s.model, u, mr->x, mr->y, mr->h));
      state.frontier_left = mr->reach;
    } else {
      state.left_placements.push_back(grounded_placement(u));
    }
  }

  for (const auto& u : right_asc) {
    if (state.frontier_right <= state.frontier_left + tol::cover_slack) {
      state.right_placements.push_back(grounded_placement(u));
      continue;
    }
    auto mr = max_reach_leftward(s.model, s.station_right, u.battery, bhat,
                                 state.frontier_right, mirrored_nfzs);
    if (mr && mr->reach < state.frontier_right) {
      state.right_placements.push_back(make_placement(s.model, u, mr->x, mr->y, mr->h));
      state.frontier_right = mr->reach;
    } else {
      state.right_placements.push_back(grounded_placement(u));
    }
  }

  state.feasible = state.frontier_left >= state.frontier_right - tol::cover_slack;
  return state;
}

// The two sweeps can overlap where they meet; slide the deepest-reaching
// right UAV back toward its station so the combined x sequence stays
// non-crossing. The slide shortens its flight, so its leftover only improves.
void fix_meeting_point(const Scenario3d& s, std::span<const UavSpec> right_asc,
                       SweepState& state) {
  if (!state.feasible || state.right_placements.empty()) return;
  double left_max = -std::numeric_limits<double>::infinity();
  for (const auto& p : state.left_placements)
    if (p.deployed) left_max = std::max(left_max, p.x_final);
  if (left_max == -std::numeric_limits<double>::infinity()) return;

  Placement* last = nullptr;
  for (auto& p : state.right_placements)
    if (p.deployed) last = &p;  // rightmost-first order: last deployed sits leftmost
  if (!last || last->x_final >= left_max) return;

  const UavSpec* spec = nullptr;
  for (const auto& u : right_asc)
    if (u.id == last->uav_id) spec = &u;
  if (!spec) return;

  const double q = std::sqrt(std::max(
      0.0, last->radius * last->radius - last->y_final * last->y_final));
  // New position: as far right as the left frontier allows without opening a
  // gap, never past the station (the flight would lengthen again).
  double target = std::min(state.frontier_left + q,
                           std::max(s.station_right.x, last->x_final));
  for (const auto& z : s.nfzs)
    if (z.contains_strictly(target) && !z.contains_strictly(last->x_final))
      target = std::min(target, z.left);
  if (target <= last->x_final) return;
  *last = make_placement(s.model, *spec, target, last->y_final, last->altitude);
}

}  // namespace

void Scenario3d::validate() const {
  model.validate();
  if (!(length >= 0.0)) throw InputError("length: must be >= 0");
  if (!(station_left.x < station_right.x))
    throw InputError("stations: left station must sit left of the right one");
  if (left_uavs.empty() && right_uavs.empty())
    throw InputError("uavs: at least one UAV required");
  auto check = [](const std::vector<UavSpec>& v, const Station& s,
                  const char* tag) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!(v[i].battery > 0.0))
        throw InputError(std::string(tag) + "[" + std::to_string(i) +
                         "].battery: must be > 0");
      if (std::abs(v[i].x - s.x) > 1e-9 || std::abs(v[i].y - s.y) > 1e-9)
        throw InputError(std::string(tag) + "[" + std::to_string(i) +
                         "]: must start at its station");
    }
  };
  check(left_uavs, station_left, "left_uavs");
  check(right_uavs, station_right, "right_uavs");
  for (std::size_t i = 1; i < left_uavs.size(); ++i)
    if (left_uavs[i - 1].battery > left_uavs[i].battery)
      throw InputError("left_uavs: must be sorted battery-ascending");
  for (std::size_t i = 1; i < right_uavs.size(); ++i)
    if (right_uavs[i - 1].battery < right_uavs[i].battery)
      throw InputError("right_uavs: must be sorted battery-descending");
  for (std::size_t k = 0; k < nfzs.size(); ++k) {
    const auto& z = nfzs[k];
    if (!(z.left < z.right))
      throw InputError("nfzs[" + std::to_string(k) + "]: left must be < right");
    if (k > 0 && nfzs[k - 1].right > z.left)
      throw InputError("nfzs[" + std::to_string(k) + "]: overlaps previous zone");
  }
}

double chord(const CoverageModel& m, double h, double y_offset) {
  const double r = radius(m, h);
  if (std::abs(y_offset) > r * (1.0 + 1e-12) + 1e-15)
    throw DomainError("chord: lateral offset exceeds the coverage radius, no "
                      "ground-line coverage");
  return std::sqrt(std::max(0.0, r * r - y_offset * y_offset));
}

std::pair<double, double> reach_window_3d(const CoverageModel& m,
                                          const UavSpec& uav,
                                          const Station& station, double bhat,
                                          double h, double y_offset) {
  const double q = chord(m, h, y_offset);
  const double rho_g = ((uav.battery - bhat) / m.c - h) / m.w;
  const double dy = std::abs(y_offset - station.y);
  if (rho_g < dy)
    throw DomainError("reach_window_3d: lateral offset unreachable within the "
                      "energy budget");
  const double rho_x = std::sqrt(rho_g * rho_g - dy * dy);
  return {station.x - rho_x - q, station.x + rho_x + q};
}

SolveReport solve_3d(const Scenario3d& scenario, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw InputError("epsilon: must be in (0, 1)");
  scenario.validate();
  const auto t0 = std::chrono::steady_clock::now();

  const auto& left_asc = scenario.left_uavs;
  std::vector<UavSpec> right_asc(scenario.right_uavs.rbegin(),
                                 scenario.right_uavs.rend());

  std::vector<Nfz> mirrored_nfzs;
  for (auto it = scenario.nfzs.rbegin(); it != scenario.nfzs.rend(); ++it)
    mirrored_nfzs.push_back({-it->right, -it->left});

  double b_max = 0.0;
  for (const auto& u : scenario.left_uavs) b_max = std::max(b_max, u.battery);
  for (const auto& u : scenario.right_uavs) b_max = std::max(b_max, u.battery);

  SearchGrid grid{tol::b_low_floor, b_max, epsilon};
  const std::int64_t k_max = std::max<std::int64_t>(grid.steps(), 1);

  SolveReport report;
  report.diagnostics.epsilon = epsilon;
  const std::int64_t k = largest_true_index(
      [&](std::int64_t idx) {
        return run_sweeps(scenario, left_asc, right_asc, grid.at(idx),
                          mirrored_nfzs)
            .feasible;
      },
      k_max, &report.diagnostics.probes);
  if (k == 0)
    throw InfeasibleError("solve_3d: the two fleets cannot cover the target "
                          "even at the lowest leftover grid point");

  SweepState state =
      run_sweeps(scenario, left_asc, right_asc, grid.at(k), mirrored_nfzs);
  fix_meeting_point(scenario, right_asc, state);

  report.placements = std::move(state.left_placements);
  for (auto it = state.right_placements.rbegin();
       it != state.right_placements.rend(); ++it)
    report.placements.push_back(*it);
  report.bhat = bottleneck_leftover(report.placements);
  report.diagnostics.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace uavcover
