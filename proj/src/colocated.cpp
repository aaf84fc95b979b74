#include "uavcover/colocated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "uavcover/linedeploy.hpp"
#include "uavcover/search.hpp"

namespace uavcover {

namespace {

constexpr double kSameSpotTol = 1e-9;

// Canonical frame: target [0, L], common station at x = -x_off with
// x_off >= 0. `mirrored` means original coordinates were flipped via
// x -> L - x (station was at or beyond the right end).
struct Canonical {
  double length = 0.0;
  double x_off = 0.0;
  bool mirrored = false;
  std::vector<Nfz> nfzs;            // canonical frame, sorted by left edge
  std::vector<UavSpec> uavs;        // battery-ascending, x = -x_off
  const CoverageModel* model = nullptr;
};

double common_station_x(const Scenario& scenario) {
  const double x0 = scenario.uavs.front().x;
  for (const auto& u : scenario.uavs) {
    if (std::abs(u.x - x0) > kSameSpotTol || std::abs(u.y) > kSameSpotTol)
      throw InputError("colocated solve requires all UAVs at one ground point");
  }
  return x0;
}

Canonical canonicalize(const Scenario& scenario, double station_x) {
  Canonical c;
  c.length = scenario.length;
  c.model = &scenario.model;
  c.mirrored = station_x > scenario.length / 2.0;
  c.x_off = c.mirrored ? std::max(0.0, station_x - scenario.length)
                       : std::max(0.0, -station_x);
  for (const auto& z : scenario.nfzs) {
    if (c.mirrored)
      c.nfzs.push_back({scenario.length - z.right, scenario.length - z.left});
    else
      c.nfzs.push_back(z);
  }
  std::sort(c.nfzs.begin(), c.nfzs.end(),
            [](const Nfz& a, const Nfz& b) { return a.left < b.left; });
  c.uavs = scenario.uavs;
  for (auto& u : c.uavs) {
    u.x = -c.x_off;
    u.y = 0.0;
  }
  std::sort(c.uavs.begin(), c.uavs.end(), [](const UavSpec& a, const UavSpec& b) {
    if (a.battery != b.battery) return a.battery < b.battery;
    return a.id < b.id;
  });
  return c;
}

// Altitude leaving exactly `bhat` for a tile starting at `seam`
// (center seam + r(h)). nullopt when the UAV cannot contribute at all;
// capped at h_star, where its leftover exceeds bhat.
std::optional<double> equal_leftover_altitude(const CoverageModel& m, double battery,
                                              double bhat, double x_off,
                                              double seam) {
  const double g0 = (battery - bhat) / m.c - m.w * (x_off + seam);
  if (!(g0 > 0.0)) return std::nullopt;
  auto f = [&](double h) { return m.w * radius(m, h) + h - g0; };
  if (f(m.h_star) <= 0.0) return m.h_star;
  return bisect_root_increasing(f, 0.0, m.h_star, tol::altitude_abs,
                                tol::max_bisect_iters);
}

// Altitude for a UAV pinned to ground position `pin` with leftover bhat.
std::optional<double> anchor_altitude(const CoverageModel& m, double battery,
                                      double bhat, double x_off, double pin) {
  const double g = (battery - bhat) / m.c - m.w * std::abs(x_off + pin);
  if (!(g > 0.0)) return std::nullopt;
  return std::min(m.h_star, g);
}

struct ChainSlot {
  int uav = 0;  // index into Canonical::uavs
  double h = 0.0;
  double x = 0.0;
};

struct Chain {
  std::vector<ChainSlot> slots;
  double seam = 0.0;
};

// Equal-leftover tiling with UAVs[from..to), starting at `seam`, stopping
// once `target` is reached; UAVs that cannot contribute stay grounded.
Chain chain_extend(const Canonical& c, int from, int to, double bhat, double seam,
                   double target) {
  Chain chain;
  chain.seam = seam;
  const auto& m = *c.model;
  for (int j = from; j < to; ++j) {
    if (chain.seam >= target - tol::cover_slack) break;
    const auto h = equal_leftover_altitude(m, c.uavs[j].battery, bhat, c.x_off,
                                           chain.seam);
    if (!h) continue;
    const double r = radius(m, *h);
    chain.slots.push_back({j, *h, chain.seam + r});
    chain.seam += 2.0 * r;
  }
  return chain;
}

double max_battery(const Canonical& c) { return c.uavs.back().battery; }

std::vector<int> index_range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

struct CandidateSolution {
  bool valid = false;
  double bhat = -std::numeric_limits<double>::infinity();
  std::vector<Placement> placements;  // canonical frame
  NfzCase nfz_case;
};

Placement canonical_placement(const Canonical& c, int uav_idx, double x, double h) {
  return make_placement(*c.model, c.uavs[uav_idx], x, 0.0, h);
}

// Unconstrained equal-leftover solve in the canonical frame.
CandidateSolution solve_unconstrained(const Canonical& c, std::int64_t* iters) {
  const auto& m = *c.model;
  const int n = static_cast<int>(c.uavs.size());
  auto covers = [&](double bhat) {
    return chain_extend(c, 0, n, bhat, 0.0, c.length).seam >=
           c.length - tol::cover_slack;
  };
  if (!covers(0.0)) {
    if (2.0 * n * m.max_radius() < c.length)
      throw InfeasibleError(
          "colocated solve: target exceeds the swarm's total coverage width "
          "even at the turning-point altitude");
    throw InfeasibleError(
        "colocated solve: some UAV's battery cannot reach its slot with "
        "positive leftover");
  }
  const double bhat = bisect_last_true_counted(covers, 0.0, max_battery(c),
                                               tol::energy_abs, iters,
                                               tol::max_bisect_iters);
  const Chain chain = chain_extend(c, 0, n, bhat, 0.0, c.length);

  CandidateSolution out;
  out.valid = true;
  out.bhat = bhat;
  std::vector<bool> deployed(n, false);
  for (const auto& slot : chain.slots) {
    out.placements.push_back(canonical_placement(c, slot.uav, slot.x, slot.h));
    deployed[slot.uav] = true;
  }
  for (int j = 0; j < n; ++j)
    if (!deployed[j]) out.placements.push_back(grounded_placement(c.uavs[j]));
  out.bhat = bottleneck_leftover(out.placements);
  return out;
}

bool residue_covered(const Canonical& c, int from, int to, double bhat,
                     double seg_from, double seg_to) {
  if (seg_to <= seg_from + tol::cover_slack) return true;
  const auto order = index_range(0, to - from);
  std::span<const UavSpec> uavs(c.uavs.data() + from, static_cast<std::size_t>(to - from));
  return sweep_cover(*c.model, uavs, order, bhat, seg_from, seg_to, c.nfzs)
      .feasible;
}

std::vector<Placement> residue_placements(const Canonical& c, int from, int to,
                                          double bhat, double seg_from,
                                          double seg_to) {
  if (to <= from) return {};
  const auto order = index_range(0, to - from);
  std::span<const UavSpec> uavs(c.uavs.data() + from, static_cast<std::size_t>(to - from));
  if (seg_to <= seg_from + tol::cover_slack) {
    std::vector<Placement> grounded;
    for (int j = from; j < to; ++j) grounded.push_back(grounded_placement(c.uavs[j]));
    return grounded;
  }
  return sweep_cover(*c.model, uavs, order, bhat, seg_from, seg_to, c.nfzs)
      .placements;
}

bool seats_legal(const Chain& chain, const Nfz& zone) {
  for (const auto& slot : chain.slots)
    if (zone.contains_strictly(slot.x)) return false;
  return true;
}

// Case 1: UAV `ai` pinned to the zone's left edge; ai..n-1 tile rightwards to
// L; 0..ai-1 must cover the left residue at the same leftover floor.
CandidateSolution solve_case_left(const Canonical& c, const Nfz& zone, int ai) {
  CandidateSolution out;
  const auto& m = *c.model;
  const int n = static_cast<int>(c.uavs.size());
  const double pin = zone.left;
  if (c.x_off + pin < 0.0) return out;  // pinning left of the station: dominated

  auto feasible = [&](double bhat) -> bool {
    const auto h = anchor_altitude(m, c.uavs[ai].battery, bhat, c.x_off, pin);
    if (!h) return false;
    const double r = radius(m, *h);
    const Chain chain = chain_extend(c, ai + 1, n, bhat, pin + r, c.length);
    if (chain.seam < c.length - tol::cover_slack) return false;
    return residue_covered(c, 0, ai, bhat, 0.0, pin - r);
  };
  if (!feasible(0.0)) return out;
  const double bhat = bisect_last_true(feasible, 0.0, max_battery(c),
                                       tol::energy_abs, tol::max_bisect_iters);

  const auto h = anchor_altitude(m, c.uavs[ai].battery, bhat, c.x_off, pin);
  if (!h) return out;
  const double r = radius(m, *h);
  Chain chain = chain_extend(c, ai + 1, n, bhat, pin + r, c.length);
  chain.slots.insert(chain.slots.begin(), {ai, *h, pin});
  if (!seats_legal(chain, zone)) return out;

  out.valid = true;
  out.placements = residue_placements(c, 0, ai, bhat, 0.0, pin - r);
  std::vector<bool> deployed(n, false);
  for (const auto& slot : chain.slots) {
    out.placements.push_back(canonical_placement(c, slot.uav, slot.x, slot.h));
    deployed[slot.uav] = true;
  }
  for (int j = ai; j < n; ++j)
    if (!deployed[j]) out.placements.push_back(grounded_placement(c.uavs[j]));
  out.bhat = bottleneck_leftover(out.placements);
  out.nfz_case.kind = NfzCaseKind::LeftEdge;
  out.nfz_case.anchor_left_id = c.uavs[ai].id;
  return out;
}

// Case 2: UAV `ai` pinned to the zone's right edge; 0..ai-1 tile [0, ..]
// up to its tile; ai+1..n-1 must cover the right residue.
CandidateSolution solve_case_right(const Canonical& c, const Nfz& zone, int ai) {
  CandidateSolution out;
  const auto& m = *c.model;
  const int n = static_cast<int>(c.uavs.size());
  const double pin = zone.right;

  auto feasible = [&](double bhat) -> bool {
    const auto h = anchor_altitude(m, c.uavs[ai].battery, bhat, c.x_off, pin);
    if (!h) return false;
    const double r = radius(m, *h);
    const Chain chain = chain_extend(c, 0, ai, bhat, 0.0, pin - r);
    if (chain.seam < pin - r - tol::cover_slack) return false;
    return residue_covered(c, ai + 1, n, bhat, pin + r, c.length);
  };
  if (!feasible(0.0)) return out;
  const double bhat = bisect_last_true(feasible, 0.0, max_battery(c),
                                       tol::energy_abs, tol::max_bisect_iters);

  const auto h = anchor_altitude(m, c.uavs[ai].battery, bhat, c.x_off, pin);
  if (!h) return out;
  const double r = radius(m, *h);
  Chain chain = chain_extend(c, 0, ai, bhat, 0.0, pin - r);
  chain.slots.push_back({ai, *h, pin});
  if (!seats_legal(chain, zone)) return out;

  out.valid = true;
  std::vector<bool> deployed(n, false);
  for (const auto& slot : chain.slots) {
    out.placements.push_back(canonical_placement(c, slot.uav, slot.x, slot.h));
    deployed[slot.uav] = true;
  }
  for (int j = 0; j < ai; ++j)
    if (!deployed[j]) out.placements.push_back(grounded_placement(c.uavs[j]));
  auto right = residue_placements(c, ai + 1, n, bhat, pin + r, c.length);
  out.placements.insert(out.placements.end(), right.begin(), right.end());
  out.bhat = bottleneck_leftover(out.placements);
  out.nfz_case.kind = NfzCaseKind::RightEdge;
  out.nfz_case.anchor_right_id = c.uavs[ai].id;
  return out;
}

// Case 3: neighbours ai-1 and ai pinned to the left and right edges, jointly
// spanning the zone; both residues covered at the same floor.
CandidateSolution solve_case_both(const Canonical& c, const Nfz& zone, int ai) {
  CandidateSolution out;
  const auto& m = *c.model;
  const int n = static_cast<int>(c.uavs.size());
  if (c.x_off + zone.left < 0.0) return out;

  auto altitudes = [&](double bhat)
      -> std::optional<std::pair<double, double>> {
    const auto hl = anchor_altitude(m, c.uavs[ai - 1].battery, bhat, c.x_off, zone.left);
    const auto hr = anchor_altitude(m, c.uavs[ai].battery, bhat, c.x_off, zone.right);
    if (!hl || !hr) return std::nullopt;
    return std::make_pair(*hl, *hr);
  };
  auto feasible = [&](double bhat) -> bool {
    const auto hs = altitudes(bhat);
    if (!hs) return false;
    const double rl = radius(m, hs->first);
    const double rr = radius(m, hs->second);
    if (rl + rr < (zone.right - zone.left) - tol::cover_slack) return false;
    return residue_covered(c, 0, ai - 1, bhat, 0.0, zone.left - rl) &&
           residue_covered(c, ai + 1, n, bhat, zone.right + rr, c.length);
  };
  if (!feasible(0.0)) return out;
  const double bhat = bisect_last_true(feasible, 0.0, max_battery(c),
                                       tol::energy_abs, tol::max_bisect_iters);
  const auto hs = altitudes(bhat);
  if (!hs) return out;
  const double rl = radius(m, hs->first);
  const double rr = radius(m, hs->second);

  out.valid = true;
  out.placements = residue_placements(c, 0, ai - 1, bhat, 0.0, zone.left - rl);
  out.placements.push_back(canonical_placement(c, ai - 1, zone.left, hs->first));
  out.placements.push_back(canonical_placement(c, ai, zone.right, hs->second));
  auto right = residue_placements(c, ai + 1, n, bhat, zone.right + rr, c.length);
  out.placements.insert(out.placements.end(), right.begin(), right.end());
  out.bhat = bottleneck_leftover(out.placements);
  out.nfz_case.kind = NfzCaseKind::BothEdges;
  out.nfz_case.anchor_left_id = c.uavs[ai - 1].id;
  out.nfz_case.anchor_right_id = c.uavs[ai].id;
  return out;
}

// Bisection of the leftover target over the edge-aware greedy sweep in
// battery order. With zones enabled this is the joint verification route
// (per-zone edge cases emerge from the sweep's clamping); without them it is
// the frontier-maximal deployment, which dominates the seamless tiling when
// the altitude cap binds.
CandidateSolution solve_swept(const Canonical& c, bool use_nfzs,
                              std::int64_t* iters) {
  const int n = static_cast<int>(c.uavs.size());
  const auto order = index_range(0, n);
  const std::span<const Nfz> nfzs =
      use_nfzs ? std::span<const Nfz>(c.nfzs) : std::span<const Nfz>();
  auto feasible = [&](double bhat) {
    return sweep_cover(*c.model, c.uavs, order, bhat, 0.0, c.length, nfzs)
        .feasible;
  };
  CandidateSolution out;
  if (!feasible(0.0)) return out;
  const double bhat = bisect_last_true_counted(feasible, 0.0, max_battery(c),
                                               tol::energy_abs, iters,
                                               tol::max_bisect_iters);
  auto sweep = sweep_cover(*c.model, c.uavs, order, bhat, 0.0, c.length, nfzs);
  out.valid = true;
  out.placements = std::move(sweep.placements);
  out.bhat = bottleneck_leftover(out.placements);
  out.nfz_case.kind = NfzCaseKind::Swept;
  return out;
}

ColocatedSolution finish(const Canonical& c, CandidateSolution cand,
                         std::int64_t iterations) {
  ColocatedSolution solution;
  solution.bhat = cand.bhat;
  solution.nfz_case = cand.nfz_case;
  solution.iterations = iterations;
  solution.placements = std::move(cand.placements);
  if (c.mirrored) {
    for (auto& p : solution.placements) p.x_final = c.length - p.x_final;
    if (solution.nfz_case.kind == NfzCaseKind::LeftEdge)
      solution.nfz_case.kind = NfzCaseKind::RightEdge;
    else if (solution.nfz_case.kind == NfzCaseKind::RightEdge)
      solution.nfz_case.kind = NfzCaseKind::LeftEdge;
    std::swap(solution.nfz_case.anchor_left_id, solution.nfz_case.anchor_right_id);
  }
  std::sort(solution.placements.begin(), solution.placements.end(),
            [](const Placement& a, const Placement& b) {
              if (a.x_final != b.x_final) return a.x_final < b.x_final;
              return a.uav_id < b.uav_id;
            });
  return solution;
}

bool violates_nfz(const std::vector<Placement>& placements,
                  const std::vector<Nfz>& nfzs) {
  for (const auto& p : placements) {
    if (!p.deployed) continue;
    for (const auto& z : nfzs)
      if (z.contains_strictly(p.x_final)) return true;
  }
  return false;
}

ColocatedSolution refine_canonical(const Canonical& c, ExecPolicy policy,
                                   std::int64_t base_iterations) {
  std::int64_t iters = base_iterations;
  if (c.nfzs.size() > 1) {
    CandidateSolution swept = solve_swept(c, true, &iters);
    if (!swept.valid)
      throw InfeasibleError("colocated refine: no deployment avoids the no-fly "
                            "zones with full coverage");
    return finish(c, std::move(swept), iters);
  }

  const Nfz zone = c.nfzs.front();
  const int n = static_cast<int>(c.uavs.size());
  // Candidate layout: [0, n) case 1 anchors, [n, 2n) case 2 anchors,
  // [2n, 3n) case 3 with pins (k-1, k), plus the joint sweep. The sweep
  // covers configurations the anchored-chain equations under-achieve when
  // the altitude cap binds inside a chain.
  const int total = 3 * n + 1;
  std::vector<CandidateSolution> candidates(total);

  auto eval = [&](int idx) {
    if (idx < n) {
      candidates[idx] = solve_case_left(c, zone, idx);
    } else if (idx < 2 * n) {
      candidates[idx] = solve_case_right(c, zone, idx - n);
    } else if (idx < 3 * n) {
      if (idx - 2 * n >= 1) candidates[idx] = solve_case_both(c, zone, idx - 2 * n);
    } else {
      std::int64_t local = 0;
      candidates[idx] = solve_swept(c, true, &local);
    }
  };

  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int idx = 0; idx < total; ++idx) eval(idx);
  } else {
    for (int idx = 0; idx < total; ++idx) eval(idx);
  }

  int best = -1;
  for (int idx = 0; idx < total; ++idx) {
    if (!candidates[idx].valid) continue;
    if (best < 0 || candidates[idx].bhat > candidates[best].bhat + 1e-9) best = idx;
  }
  if (best < 0)
    throw InfeasibleError("colocated refine: no edge case admits full coverage "
                          "with positive leftover");
  return finish(c, std::move(candidates[best]), iters);
}

// allow_frontier_upgrade swaps in the frontier-maximal greedy deployment
// when it strictly beats the equal-leftover tiling (possible once the
// altitude cap or the low-altitude budget branch binds); the plain
// equal-leftover surface keeps the tiling structure unconditionally.
ColocatedSolution solve_canonical(const Scenario& scenario, double station_x,
                                  bool ignore_nfz, ExecPolicy policy,
                                  bool allow_frontier_upgrade) {
  const Canonical c = canonicalize(scenario, station_x);
  std::int64_t iters = 0;
  CandidateSolution unconstrained = solve_unconstrained(c, &iters);
  if (allow_frontier_upgrade) {
    CandidateSolution greedy = solve_swept(c, false, &iters);
    if (greedy.valid && greedy.bhat > unconstrained.bhat + 1e-9) {
      greedy.nfz_case.kind = NfzCaseKind::None;
      unconstrained = std::move(greedy);
    }
  }
  if (ignore_nfz || c.nfzs.empty() ||
      !violates_nfz(unconstrained.placements, c.nfzs))
    return finish(c, std::move(unconstrained), iters);
  return refine_canonical(c, policy, iters);
}

// Station strictly inside (0, L): split at the station and search over UAV
// partitions between the two subintervals.
ColocatedSolution solve_split(const Scenario& scenario, double station_x,
                              bool ignore_nfz, ExecPolicy policy,
                              bool allow_frontier_upgrade) {
  const int n = static_cast<int>(scenario.uavs.size());
  bool all_equal = true;
  for (const auto& u : scenario.uavs)
    all_equal = all_equal && u.battery == scenario.uavs.front().battery;
  if (!all_equal && n > 12)
    throw InputError("colocated solve: interior station with distinct "
                     "batteries is limited to 12 UAVs (partition search)");
  if (n > 63)
    throw InputError("colocated solve: interior station is limited to 63 UAVs");

  Scenario left_base, right_base;
  left_base.model = right_base.model = scenario.model;
  left_base.length = station_x;
  right_base.length = scenario.length - station_x;
  for (const auto& z : scenario.nfzs) {
    if (z.left < station_x)
      left_base.nfzs.push_back({z.left, std::min(z.right, station_x)});
    if (z.right > station_x)
      right_base.nfzs.push_back(
          {std::max(z.left, station_x) - station_x, z.right - station_x});
  }

  std::vector<int> sorted(n);
  std::iota(sorted.begin(), sorted.end(), 0);
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    if (scenario.uavs[a].battery != scenario.uavs[b].battery)
      return scenario.uavs[a].battery < scenario.uavs[b].battery;
    return scenario.uavs[a].id < scenario.uavs[b].id;
  });

  // Partition masks: with equal batteries only the left-side count matters.
  std::vector<std::uint64_t> masks;
  if (all_equal) {
    for (int k = 0; k <= n; ++k) {
      std::uint64_t mask = 0;
      for (int i = 0; i < k; ++i) mask |= std::uint64_t{1} << sorted[i];
      masks.push_back(mask);
    }
  } else {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      masks.push_back(mask);
  }

  struct SplitOutcome {
    bool valid = false;
    double bhat = -std::numeric_limits<double>::infinity();
    ColocatedSolution left, right;
    bool left_used = false, right_used = false;
  };
  std::vector<SplitOutcome> outcomes(masks.size());

  auto eval = [&](std::size_t mi) {
    Scenario left = left_base, right = right_base;
    for (int i = 0; i < n; ++i) {
      UavSpec u = scenario.uavs[i];
      if (masks[mi] & (std::uint64_t{1} << i)) {
        left.uavs.push_back(u);
      } else {
        u.x -= station_x;  // right subinterval frame
        right.uavs.push_back(u);
      }
    }
    SplitOutcome& out = outcomes[mi];
    try {
      double bottleneck = std::numeric_limits<double>::infinity();
      if (!left.uavs.empty()) {
        out.left = solve_canonical(left, station_x, ignore_nfz,
                                   ExecPolicy::Serial, allow_frontier_upgrade);
        out.left_used = true;
        bottleneck = std::min(bottleneck, out.left.bhat);
      } else if (left.length > tol::cover_slack) {
        return;  // uncovered side
      }
      if (!right.uavs.empty()) {
        out.right = solve_canonical(right, 0.0, ignore_nfz, ExecPolicy::Serial,
                                    allow_frontier_upgrade);
        out.right_used = true;
        bottleneck = std::min(bottleneck, out.right.bhat);
      } else if (right.length > tol::cover_slack) {
        return;
      }
      out.valid = true;
      out.bhat = bottleneck;
    } catch (const InfeasibleError&) {
    }
  };

  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t mi = 0; mi < masks.size(); ++mi) eval(mi);
  } else {
    for (std::size_t mi = 0; mi < masks.size(); ++mi) eval(mi);
  }

  std::size_t best = masks.size();
  for (std::size_t mi = 0; mi < masks.size(); ++mi) {
    if (!outcomes[mi].valid) continue;
    if (best == masks.size() || outcomes[mi].bhat > outcomes[best].bhat) best = mi;
  }
  if (best == masks.size())
    throw InfeasibleError("colocated solve: no UAV partition covers both sides "
                          "of the interior station");

  SplitOutcome& chosen = outcomes[best];
  ColocatedSolution solution;
  bool refined = false;
  if (chosen.left_used) {
    refined = refined || chosen.left.nfz_case.kind != NfzCaseKind::None;
    solution.iterations += chosen.left.iterations;
    for (const auto& p : chosen.left.placements) solution.placements.push_back(p);
  }
  if (chosen.right_used) {
    refined = refined || chosen.right.nfz_case.kind != NfzCaseKind::None;
    solution.iterations += chosen.right.iterations;
    for (auto p : chosen.right.placements) {
      p.x_final += station_x;
      solution.placements.push_back(p);
    }
  }
  solution.nfz_case.kind = refined ? NfzCaseKind::Swept : NfzCaseKind::None;
  std::sort(solution.placements.begin(), solution.placements.end(),
            [](const Placement& a, const Placement& b) {
              if (a.x_final != b.x_final) return a.x_final < b.x_final;
              return a.uav_id < b.uav_id;
            });
  solution.bhat = bottleneck_leftover(solution.placements);
  return solution;
}

ColocatedSolution solve_impl(const Scenario& scenario, bool ignore_nfz,
                             ExecPolicy policy, bool allow_frontier_upgrade) {
  scenario.validate();
  const double x0 = common_station_x(scenario);
  if (x0 > kSameSpotTol && x0 < scenario.length - kSameSpotTol)
    return solve_split(scenario, x0, ignore_nfz, policy, allow_frontier_upgrade);
  return solve_canonical(scenario, x0, ignore_nfz, policy,
                         allow_frontier_upgrade);
}

}  // namespace

ColocatedSolution solve_equal_leftover(const Scenario& scenario, bool ignore_nfz) {
  return solve_impl(scenario, ignore_nfz, ExecPolicy::Parallel, false);
}

ColocatedSolution refine_with_nfz(const ColocatedSolution& solution,
                                  const Scenario& scenario, ExecPolicy policy) {
  scenario.validate();
  if (scenario.nfzs.empty() || !violates_nfz(solution.placements, scenario.nfzs))
    return solution;
  const double x0 = common_station_x(scenario);
  if (x0 > kSameSpotTol && x0 < scenario.length - kSameSpotTol)
    return solve_split(scenario, x0, false, policy, true);
  const Canonical c = canonicalize(scenario, x0);
  return refine_canonical(c, policy, solution.iterations);
}

ColocatedSolution solve_colocated(const Scenario& scenario, ExecPolicy policy) {
  return solve_impl(scenario, false, policy, true);
}

SolveReport to_report(const ColocatedSolution& solution) {
  SolveReport report;
  report.placements = solution.placements;
  report.bhat = solution.bhat;
  report.diagnostics.iterations = solution.iterations;
  return report;
}

}  // namespace uavcover
