#include "uavcover/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uavcover {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kEdgeTol = 1e-12;

struct Entry {
  double val = kNegInf;
  std::int64_t cand = -1;
};

bool better(const Entry& a, const Entry& b) {
  if (a.val != b.val) return a.val > b.val;
  return a.cand < b.cand;  // deterministic tie-break
}

struct OracleGrid {
  std::vector<double> xs;  // legal center positions, sorted
  std::vector<double> hs;  // altitudes, ascending
  std::vector<double> rs;  // radius per altitude

  // last xs index with xs[i] <= p (+tolerance); -1 when p lies left of all.
  int bucket(double p) const {
    auto it = std::upper_bound(xs.begin(), xs.end(), p + kEdgeTol);
    return static_cast<int>(it - xs.begin()) - 1;
  }
  // first xs index with xs[i] >= p (-tolerance); xs.size() when past the end.
  int bucket_up(double p) const {
    auto it = std::lower_bound(xs.begin(), xs.end(), p - kEdgeTol);
    return static_cast<int>(it - xs.begin());
  }
};

OracleGrid build_grid(const Scenario& s, const GridSpec& g) {
  // Work guard: the layered scan touches each per-UAV state once per chain
  // suffix, so a few million states per UAV stay tractable.
  const double per_uav =
      (std::floor(s.length / g.dx) + 1.0) * (std::floor(s.model.h_star / g.dh) + 1.0);
  if (per_uav > 8e6)
    throw InputError("oracle: instance too large, per-UAV grid exceeds 8e6 states");
  if (s.uavs.size() > 4)
    throw InputError("oracle: instance too large, at most 4 UAVs");

  OracleGrid grid;
  for (std::int64_t i = 0; static_cast<double>(i) * g.dx <= s.length + kEdgeTol; ++i)
    grid.xs.push_back(static_cast<double>(i) * g.dx);
  grid.xs.push_back(s.length);
  for (const auto& z : s.nfzs) {
    grid.xs.push_back(z.left);
    grid.xs.push_back(z.right);
  }
  std::sort(grid.xs.begin(), grid.xs.end());
  grid.xs.erase(std::unique(grid.xs.begin(), grid.xs.end(),
                            [](double a, double b) { return std::abs(a - b) < kEdgeTol; }),
                grid.xs.end());
  std::erase_if(grid.xs, [&](double x) {
    for (const auto& z : s.nfzs)
      if (z.contains_strictly(x)) return true;
    return false;
  });

  for (std::int64_t i = 1; static_cast<double>(i) * g.dh <= s.model.h_star + kEdgeTol; ++i)
    grid.hs.push_back(std::min(static_cast<double>(i) * g.dh, s.model.h_star));
  grid.hs.push_back(s.model.h_star);
  std::sort(grid.hs.begin(), grid.hs.end());
  grid.hs.erase(std::unique(grid.hs.begin(), grid.hs.end(),
                            [](double a, double b) { return std::abs(a - b) < kEdgeTol; }),
                grid.hs.end());

  grid.rs.reserve(grid.hs.size());
  for (double h : grid.hs) grid.rs.push_back(radius(s.model, h));
  return grid;
}

using FArray = std::vector<Entry>;

// F[j] = best achievable min-leftover over the remaining chain, given that
// this UAV's tile must start at or before xs[j]. `next` is null for the last
// chain element, which must instead reach the interval end.
FArray build_layer(const Scenario& s, const OracleGrid& grid, int uav_idx,
                   const FArray* next, ExecPolicy policy) {
  const auto& m = s.model;
  const auto& u = s.uavs[uav_idx];
  const int nx = static_cast<int>(grid.xs.size());
  const int nh = static_cast<int>(grid.hs.size());

  auto scan_rows = [&](int ih_begin, int ih_end, FArray& out) {
    for (int ih = ih_begin; ih < ih_end; ++ih) {
      const double h = grid.hs[ih];
      const double r = grid.rs[ih];
      for (int ix = 0; ix < nx; ++ix) {
        const double x = grid.xs[ix];
        const double lo = u.battery - m.c * (m.w * std::abs(x - u.x) + h);
        const double right = x + r;
        double val;
        if (next) {
          const int b = grid.bucket(right);
          if (b < 0) continue;
          val = std::min(lo, (*next)[b].val);
        } else {
          if (right < s.length - tol::cover_slack) continue;
          val = lo;
        }
        if (val == kNegInf) continue;
        const int at = grid.bucket_up(x - r);
        if (at >= nx) continue;
        const Entry e{val, static_cast<std::int64_t>(ix) * nh + ih};
        if (better(e, out[at])) out[at] = e;
      }
    }
  };

  FArray layer(nx);
  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    std::vector<FArray> partials(threads, FArray(nx));
#pragma omp parallel num_threads(threads)
    {
      const int tid = omp_get_thread_num();
      int begin = static_cast<int>(static_cast<std::int64_t>(nh) * tid / threads);
      int end = static_cast<int>(static_cast<std::int64_t>(nh) * (tid + 1) / threads);
      scan_rows(begin, end, partials[tid]);
    }
    for (const auto& part : partials)
      for (int j = 0; j < nx; ++j)
        if (better(part[j], layer[j])) layer[j] = part[j];
#else
    scan_rows(0, nh, layer);
#endif
  } else {
    scan_rows(0, nh, layer);
  }

  for (int j = 1; j < nx; ++j)
    if (better(layer[j - 1], layer[j])) layer[j] = layer[j - 1];
  return layer;
}

using Tuple = std::vector<int>;

// Memoized suffix layers: the layer of (a, b, c) composes the layer of (b, c).
const FArray& layer_for(const Scenario& s, const OracleGrid& grid,
                        const Tuple& tuple, std::map<Tuple, FArray>& memo,
                        ExecPolicy policy) {
  auto it = memo.find(tuple);
  if (it != memo.end()) return it->second;
  const FArray* next = nullptr;
  if (tuple.size() > 1) {
    Tuple rest(tuple.begin() + 1, tuple.end());
    next = &layer_for(s, grid, rest, memo, policy);
  }
  FArray layer = build_layer(s, grid, tuple.front(), next, policy);
  return memo.emplace(tuple, std::move(layer)).first->second;
}

void enumerate_tuples(int n, Tuple& current, std::vector<bool>& used,
                      std::vector<Tuple>& out) {
  if (!current.empty()) out.push_back(current);
  if (current.size() == static_cast<std::size_t>(n)) return;
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    current.push_back(i);
    enumerate_tuples(n, current, used, out);
    current.pop_back();
    used[i] = false;
  }
}

}  // namespace

SolveReport brute_force(const Scenario& scenario, const GridSpec& grid_spec,
                        ExecPolicy policy) {
  scenario.validate();
  grid_spec.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const int n = static_cast<int>(scenario.uavs.size());

  SolveReport report;
  if (scenario.length <= tol::cover_slack) {
    for (const auto& u : scenario.uavs)
      report.placements.push_back(grounded_placement(u));
    report.bhat = bottleneck_leftover(report.placements);
    return report;
  }

  const OracleGrid grid = build_grid(scenario, grid_spec);
  std::vector<Tuple> tuples;
  {
    Tuple current;
    std::vector<bool> used(n, false);
    enumerate_tuples(n, current, used, tuples);
  }

  std::map<Tuple, FArray> memo;
  const int origin = grid.bucket(0.0);

  double best_val = kNegInf;
  const Tuple* best_tuple = nullptr;
  for (const auto& tuple : tuples) {
    const FArray& layer = layer_for(scenario, grid, tuple, memo, policy);
    if (origin < 0) continue;
    double val = layer[origin].val;
    if (val == kNegInf) continue;
    for (int i = 0; i < n; ++i) {
      if (std::find(tuple.begin(), tuple.end(), i) == tuple.end())
        val = std::min(val, scenario.uavs[i].battery);
    }
    if (val > best_val) {
      best_val = val;
      best_tuple = &tuple;
    }
  }
  report.diagnostics.probes = static_cast<std::int64_t>(tuples.size());

  if (!best_tuple)
    throw InfeasibleError("oracle: no covering assignment at this discretization");

  // Reconstruct the winning chain by walking the argmax candidates.
  const int nh = static_cast<int>(grid.hs.size());
  std::vector<bool> deployed(n, false);
  double p = 0.0;
  for (std::size_t d = 0; d < best_tuple->size(); ++d) {
    Tuple suffix(best_tuple->begin() + d, best_tuple->end());
    const FArray& layer = memo.at(suffix);
    const Entry e = layer[grid.bucket(p)];
    const int ix = static_cast<int>(e.cand / nh);
    const int ih = static_cast<int>(e.cand % nh);
    const auto& u = scenario.uavs[suffix.front()];
    report.placements.push_back(
        make_placement(scenario.model, u, grid.xs[ix], u.y, grid.hs[ih]));
    deployed[suffix.front()] = true;
    p = grid.xs[ix] + grid.rs[ih];
  }
  for (int i = 0; i < n; ++i)
    if (!deployed[i]) report.placements.push_back(grounded_placement(scenario.uavs[i]));

  report.bhat = bottleneck_leftover(report.placements);
  report.diagnostics.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

Scenario partition_scenario(std::span<const int> ints, double bhat) {
  if (ints.empty()) throw InputError("partition_scenario: need at least one integer");
  for (int a : ints)
    if (a < 1) throw InputError("partition_scenario: integers must be positive");
  if (!(bhat > 0.0)) throw InputError("partition_scenario: bhat must be > 0");

  std::vector<double> widths(ints.begin(), ints.end());
  std::sort(widths.begin(), widths.end());
  const double rho = widths.front() / 4.0;
  double sum = 0.0;
  for (double a : widths) sum += a;
  const double length = sum + 2.0 * rho;

  Scenario s;
  s.model.alpha = 1.0;
  s.model.beta = 0.5;
  s.model.w = 1e-3;  // horizontal motion nearly free: tile order cannot matter
  s.model.c = 21.6;
  const double max_half = widths.back() / 2.0;
  s.model.h_star = std::max(2.0, 1.25 * max_half * max_half);
  s.length = length;

  const double mid = length / 2.0;
  // Each integer becomes a UAV whose battery pays for its tile's altitude
  // plus a horizontal allowance valid anywhere on the interval.
  int id = 1;
  for (double a : widths) {
    const double h = (a / 2.0) * (a / 2.0);
    UavSpec u;
    u.id = id++;
    u.x = mid;
    u.battery = bhat + s.model.c * (h + s.model.w * (length / 2.0));
    s.uavs.push_back(u);
  }
  // Gap plug: exactly enough energy to climb over the midpoint, nothing more.
  UavSpec plug;
  plug.id = id;
  plug.x = mid;
  plug.battery = bhat + s.model.c * (rho * rho);
  s.uavs.push_back(plug);

  s.nfzs.push_back({mid - 3.0 * rho, mid - rho});
  s.nfzs.push_back({mid + rho, mid + 3.0 * rho});
  return s;
}

}  // namespace uavcover
