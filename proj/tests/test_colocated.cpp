#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "uavcover/colocated.hpp"
#include "uavcover/linedeploy.hpp"
#include "uavcover/rng.hpp"
#include "uavcover/search.hpp"

using namespace uavcover;

namespace {

Scenario station_scenario(std::vector<double> batteries, double length,
                          double station_x = 0.0) {
  Scenario s;
  s.length = length;
  int id = 1;
  for (double b : batteries) s.uavs.push_back({id++, station_x, 0.0, b});
  return s;
}

// Reference solver for zoned colocated instances: bisection over the
// edge-aware greedy sweep. Independent route used to cross-check the
// explicit case enumeration.
double bisect_greedy_bhat(const Scenario& s) {
  double min_b = 1e300;
  for (const auto& u : s.uavs) min_b = std::min(min_b, u.battery);
  auto feasible = [&](double bhat) { return check_feasible(s, bhat).feasible; };
  REQUIRE(feasible(0.0));
  return bisect_last_true(feasible, 0.0, min_b, tol::energy_abs);
}

const Placement* by_id(const ColocatedSolution& sol, int id) {
  for (const auto& p : sol.placements)
    if (p.uav_id == id) return &p;
  return nullptr;
}

}  // namespace

TEST_CASE("single UAV closed form") {
  const auto sol = solve_colocated(station_scenario({780.0}, 2.0));
  REQUIRE(sol.placements.size() == 1);
  CHECK(sol.placements[0].x_final == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(sol.placements[0].altitude == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(sol.bhat == doctest::Approx(754.08).epsilon(1e-9));
}

TEST_CASE("two equal UAVs, hand-solved tiling") {
  const auto sol = solve_colocated(station_scenario({780.0, 780.0}, 2.0));
  REQUIRE(sol.placements.size() == 2);
  CHECK(sol.placements[0].x_final == doctest::Approx(0.6).epsilon(1e-7));
  CHECK(sol.placements[0].altitude == doctest::Approx(0.36).epsilon(1e-7));
  CHECK(sol.placements[1].x_final == doctest::Approx(1.6).epsilon(1e-7));
  CHECK(sol.placements[1].altitude == doctest::Approx(0.16).epsilon(1e-7));
  CHECK(sol.bhat == doctest::Approx(769.632).epsilon(1e-9));
}

TEST_CASE("lower battery deploys closer to the station") {
  const auto sol = solve_colocated(station_scenario({780.0, 800.0}, 2.0));
  const auto* weak = by_id(sol, 1);
  const auto* strong = by_id(sol, 2);
  REQUIRE(weak);
  REQUIRE(strong);
  CHECK(weak->x_final < strong->x_final);
  CHECK(weak->deployed);
  CHECK(weak->leftover == doctest::Approx(strong->leftover).epsilon(1e-8));
}

TEST_CASE("a much stronger partner covers alone, the weak one keeps its charge") {
  // burning the weak battery down to the strong UAV's equal-leftover level
  // is impossible; the optimum grounds it and the bottleneck is its battery
  const auto sol = solve_colocated(station_scenario({780.0, 900.0}, 2.0));
  const auto* weak = by_id(sol, 1);
  const auto* strong = by_id(sol, 2);
  REQUIRE(weak);
  REQUIRE(strong);
  CHECK_FALSE(weak->deployed);
  CHECK(strong->deployed);
  CHECK(sol.bhat == doctest::Approx(780.0));
}

TEST_CASE("a UAV that cannot contribute stays grounded") {
  // the 1 Wh UAV cannot even lift off usefully once the floor is positive
  const auto sol = solve_colocated(station_scenario({1.0, 780.0, 780.0}, 3.0));
  const auto* tiny = by_id(sol, 1);
  REQUIRE(tiny);
  CHECK_FALSE(tiny->deployed);
  CHECK(tiny->leftover == doctest::Approx(1.0));
  CHECK(sol.bhat == doctest::Approx(1.0));  // grounded battery is the bottleneck
}

TEST_CASE("zero-length target grounds everyone") {
  const auto sol = solve_colocated(station_scenario({700.0, 780.0}, 0.0));
  for (const auto& p : sol.placements) CHECK_FALSE(p.deployed);
  CHECK(sol.bhat == doctest::Approx(700.0));
}

TEST_CASE("infeasible targets throw") {
  // 2 UAVs, max width 2 * 2 * sqrt(2) < 20
  CHECK_THROWS_AS(solve_colocated(station_scenario({780.0, 780.0}, 20.0)),
                  InfeasibleError);
  // batteries cannot pay for the trip even when radii could
  CHECK_THROWS_AS(
      solve_colocated(station_scenario(std::vector<double>(8, 30.0), 20.0)),
      InfeasibleError);
}

TEST_CASE("equal leftover and seamless tiling on random instances") {
  Rng rng(101);
  int solved = 0;
  while (solved < 30) {
    const int n = rng.uniform_int(1, 10);
    std::vector<double> batteries;
    for (int i = 0; i < n; ++i) batteries.push_back(rng.uniform(760.0, 800.0));
    std::sort(batteries.begin(), batteries.end());
    const double length = rng.uniform(1.0, std::min(10.0, 1.5 * n));
    Scenario s = station_scenario(batteries, length);
    ColocatedSolution sol;
    try {
      sol = solve_equal_leftover(s, true);
    } catch (const InfeasibleError&) {
      continue;
    }
    ++solved;

    double min_b = batteries.front();
    double lo = 1e300, hi = -1e300;
    double edge = 0.0;
    for (const auto& p : sol.placements) {
      if (!p.deployed) continue;
      lo = std::min(lo, p.leftover);
      hi = std::max(hi, p.leftover);
      CHECK(p.x_final - p.radius == doctest::Approx(edge).epsilon(1e-9));
      edge = p.x_final + p.radius;
      CHECK(p.altitude <= s.model.h_star + 1e-12);
    }
    CHECK(hi - lo < 1e-6 * min_b);
    CHECK(std::abs(edge - length) < 1e-6);
  }
}

TEST_CASE("equal batteries put further UAVs lower") {
  const auto sol =
      solve_colocated(station_scenario(std::vector<double>(5, 780.0), 8.0));
  for (std::size_t i = 1; i < sol.placements.size(); ++i) {
    CHECK(sol.placements[i].x_final > sol.placements[i - 1].x_final);
    CHECK(sol.placements[i].altitude < sol.placements[i - 1].altitude);
  }
}

TEST_CASE("solution untouched when no placement violates a zone") {
  Scenario s = station_scenario(std::vector<double>(4, 780.0), 8.0);
  s.nfzs.push_back({7.5, 9.0});  // last tile ends at 8, centers all below 7.5
  const auto plain = solve_equal_leftover(s, true);
  bool violates = false;
  for (const auto& p : plain.placements)
    for (const auto& z : s.nfzs) violates = violates || z.contains_strictly(p.x_final);
  REQUIRE_FALSE(violates);
  const auto refined = refine_with_nfz(plain, s);
  CHECK(refined.bhat == plain.bhat);
  CHECK(refined.nfz_case.kind == NfzCaseKind::None);
}

TEST_CASE("zone refinement reproduces the reported edge relocations") {
  // five equal UAVs cannot reach 20 km under the 2 km altitude cap, so this
  // instance runs a taller turning point and a slightly flatter radius law
  CoverageModel tall;
  tall.h_star = 6.0;
  tall.beta = 0.7;

  Scenario s = station_scenario(std::vector<double>(5, 780.0), 20.0);
  s.model = tall;
  s.nfzs.push_back({10.0, 13.0});

  const auto plain = solve_equal_leftover(s, true);
  bool violates = false;
  for (const auto& p : plain.placements)
    violates = violates || s.nfzs[0].contains_strictly(p.x_final);
  REQUIRE(violates);

  const auto refined = refine_with_nfz(plain, s);
  CHECK(refined.bhat <= plain.bhat + 1e-9);
  bool at_right_edge = false;
  for (const auto& p : refined.placements)
    at_right_edge = at_right_edge || std::abs(p.x_final - 13.0) < 1e-9;
  CHECK(at_right_edge);

  // raising one battery sends it to the rightmost slot and pins another UAV
  // to the left edge
  Scenario boosted = s;
  boosted.uavs[2].battery = 900.0;
  const auto sol = solve_colocated(boosted);
  const Placement* rightmost = nullptr;
  for (const auto& p : sol.placements)
    if (!rightmost || p.x_final > rightmost->x_final) rightmost = &p;
  REQUIRE(rightmost);
  CHECK(rightmost->uav_id == 3);
  bool at_left_edge = false;
  for (const auto& p : sol.placements)
    at_left_edge = at_left_edge || std::abs(p.x_final - 10.0) < 1e-9;
  CHECK(at_left_edge);
}

TEST_CASE("zone constraints never improve the leftover") {
  Rng rng(202);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = rng.uniform_int(8, 12);
    Scenario s = station_scenario(std::vector<double>(n, 780.0), 20.0);
    const double zl = rng.uniform(2.0, 15.0);
    s.nfzs.push_back({zl, zl + rng.uniform(0.5, 2.5)});
    Scenario open = s;
    open.nfzs.clear();
    const auto plain = solve_colocated(open);
    try {
      const auto refined = solve_colocated(s);
      CHECK(refined.bhat <= plain.bhat + 1e-9);
      for (const auto& p : refined.placements)
        if (p.deployed) CHECK_FALSE(s.nfzs[0].contains_strictly(p.x_final));
    } catch (const InfeasibleError&) {
    }
  }
}

TEST_CASE("one more UAV never hurts") {
  double prev = -1e300;
  for (int n = 8; n <= 14; ++n) {
    const auto sol =
        solve_colocated(station_scenario(std::vector<double>(n, 780.0), 20.0));
    CHECK(sol.bhat >= prev - 1e-9);
    prev = sol.bhat;
  }
}

TEST_CASE("explicit cases agree with the greedy bisection route") {
  Rng rng(303);
  int checked = 0;
  while (checked < 12) {
    const int n = rng.uniform_int(8, 12);
    std::vector<double> batteries;
    for (int i = 0; i < n; ++i) batteries.push_back(rng.uniform(770.0, 795.0));
    std::sort(batteries.begin(), batteries.end());
    Scenario s = station_scenario(batteries, 20.0);
    const double zl = rng.uniform(3.0, 14.0);
    s.nfzs.push_back({zl, zl + rng.uniform(1.0, 3.0)});

    ColocatedSolution plain;
    try {
      plain = solve_equal_leftover(s, true);
    } catch (const InfeasibleError&) {
      continue;
    }
    bool violates = false;
    for (const auto& p : plain.placements)
      violates = violates || s.nfzs[0].contains_strictly(p.x_final);
    if (!violates) continue;

    try {
      const auto refined = refine_with_nfz(plain, s);
      const double greedy = bisect_greedy_bhat(s);
      CHECK(refined.bhat == doctest::Approx(greedy).epsilon(1e-7));
      ++checked;
    } catch (const InfeasibleError&) {
    }
  }
}

TEST_CASE("two zones fall back to the joint sweep") {
  // zone widths stay below 2 r(h*) so edge pairs can bridge them
  Scenario s = station_scenario(std::vector<double>(10, 780.0), 20.0);
  s.nfzs.push_back({4.0, 6.0});
  s.nfzs.push_back({10.0, 12.5});
  const auto sol = solve_colocated(s);
  CHECK(sol.nfz_case.kind == NfzCaseKind::Swept);
  for (const auto& p : sol.placements) {
    if (!p.deployed) continue;
    for (const auto& z : s.nfzs) CHECK_FALSE(z.contains_strictly(p.x_final));
  }
  CHECK(sol.bhat == doctest::Approx(bisect_greedy_bhat(s)).epsilon(1e-7));
  // coverage still complete
  std::vector<Placement> deployed;
  for (const auto& p : sol.placements)
    if (p.deployed) deployed.push_back(p);
  double edge = 0.0;
  for (const auto& p : deployed) {
    CHECK(p.x_final - p.radius <= edge + 1e-6);
    edge = std::max(edge, p.x_final + p.radius);
  }
  CHECK(edge >= 20.0 - 1e-6);
}

TEST_CASE("station strictly inside splits the interval") {
  Scenario s = station_scenario({780.0, 780.0}, 2.0, 1.0);
  const auto sol = solve_colocated(s);
  // one UAV per side, each covering a unit interval from its end
  REQUIRE(sol.placements.size() == 2);
  CHECK(sol.placements[0].x_final == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(sol.placements[1].x_final == doctest::Approx(1.5).epsilon(1e-7));
  const double d = 0.2 * 0.5 + 0.25;
  CHECK(sol.bhat == doctest::Approx(780.0 - 21.6 * d).epsilon(1e-9));
}

TEST_CASE("zone refinement works in the mirrored frame") {
  // same geometry launched from either end must give the same leftover
  Scenario from_left = station_scenario(std::vector<double>(10, 780.0), 20.0, 0.0);
  from_left.nfzs.push_back({6.0, 8.0});
  Scenario from_right = station_scenario(std::vector<double>(10, 780.0), 20.0, 20.0);
  from_right.nfzs.push_back({12.0, 14.0});

  const auto a = solve_colocated(from_left);
  const auto b = solve_colocated(from_right);
  CHECK(a.bhat == doctest::Approx(b.bhat).epsilon(1e-9));
  for (const auto& p : b.placements)
    if (p.deployed) CHECK_FALSE(from_right.nfzs[0].contains_strictly(p.x_final));
}

TEST_CASE("interior station with a zone stays legal") {
  Scenario s = station_scenario(std::vector<double>(6, 780.0), 10.0, 5.0);
  s.nfzs.push_back({2.0, 3.0});
  const auto sol = solve_colocated(s);
  Scenario open = s;
  open.nfzs.clear();
  CHECK(sol.bhat <= solve_colocated(open).bhat + 1e-9);
  std::vector<const Placement*> deployed;
  for (const auto& p : sol.placements) {
    if (!p.deployed) continue;
    CHECK_FALSE(s.nfzs[0].contains_strictly(p.x_final));
    deployed.push_back(&p);
  }
  double edge = 0.0;
  for (const auto* p : deployed) {
    CHECK(p->x_final - p->radius <= edge + 1e-6);
    edge = std::max(edge, p->x_final + p->radius);
  }
  CHECK(edge >= s.length - 1e-6);
}

TEST_CASE("station beyond the right end mirrors") {
  // station 1 km right of the interval: same geometry as 1 km left of it
  Scenario right = station_scenario({780.0, 820.0}, 4.0, 5.0);
  Scenario left = station_scenario({780.0, 820.0}, 4.0, -1.0);
  const auto a = solve_colocated(right);
  const auto b = solve_colocated(left);
  CHECK(a.bhat == doctest::Approx(b.bhat).epsilon(1e-9));
  // mirrored geometry: positions reflect about L/2
  REQUIRE(a.placements.size() == b.placements.size());
  for (std::size_t i = 0; i < a.placements.size(); ++i) {
    const auto& pa = a.placements[i];
    const auto& pb = b.placements[a.placements.size() - 1 - i];
    CHECK(pa.x_final == doctest::Approx(4.0 - pb.x_final).epsilon(1e-7));
  }
}
