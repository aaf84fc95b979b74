#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "uavcover/colocated.hpp"
#include "uavcover/oracle.hpp"
#include "uavcover/permheur.hpp"
#include "uavcover/rng.hpp"

using namespace uavcover;

// The OpenMP kernels must reproduce the serial reference bit for bit: all
// reductions are ordered or use total-order tie-breaks.

namespace {

void check_identical(const SolveReport& a, const SolveReport& b) {
  CHECK(a.bhat == b.bhat);
  REQUIRE(a.placements.size() == b.placements.size());
  for (std::size_t i = 0; i < a.placements.size(); ++i) {
    CHECK(a.placements[i].uav_id == b.placements[i].uav_id);
    CHECK(a.placements[i].x_final == b.placements[i].x_final);
    CHECK(a.placements[i].altitude == b.placements[i].altitude);
    CHECK(a.placements[i].leftover == b.placements[i].leftover);
    CHECK(a.placements[i].deployed == b.placements[i].deployed);
  }
}

}  // namespace

TEST_CASE("oracle layers: serial vs parallel") {
  Rng rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    Scenario s;
    s.length = rng.uniform(0.8, 1.6);
    const int n = rng.uniform_int(2, 3);
    for (int i = 0; i < n; ++i)
      s.uavs.push_back({i + 1, rng.uniform(0.0, s.length), 0.0,
                        rng.uniform(700.0, 800.0)});
    const GridSpec grid{4e-3, 4e-3};
    check_identical(brute_force(s, grid, ExecPolicy::Serial),
                    brute_force(s, grid, ExecPolicy::Parallel));
  }
}

TEST_CASE("kappa sequence loop: serial vs parallel") {
  Rng rng(13);
  Scenario s;
  s.length = 11.0;
  for (int i = 0; i < 6; ++i)
    s.uavs.push_back({i + 1, rng.uniform(0.0, s.length), 0.0,
                      rng.uniform(650.0, 900.0)});
  for (int kappa : {0, 2, 3}) {
    check_identical(solve_kappa(s, kappa, 1e-3, ExecPolicy::Serial),
                    solve_kappa(s, kappa, 1e-3, ExecPolicy::Parallel));
  }
}

TEST_CASE("zone case scan: serial vs parallel") {
  Rng rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    Scenario s;
    s.length = 20.0;
    const int n = rng.uniform_int(9, 14);
    for (int i = 0; i < n; ++i)
      s.uavs.push_back({i + 1, 0.0, 0.0, rng.uniform(770.0, 795.0)});
    const double zl = rng.uniform(4.0, 14.0);
    s.nfzs.push_back({zl, zl + rng.uniform(0.8, 2.2)});
    try {
      const auto serial = solve_colocated(s, ExecPolicy::Serial);
      const auto parallel = solve_colocated(s, ExecPolicy::Parallel);
      CHECK(serial.bhat == parallel.bhat);
      CHECK(serial.nfz_case.kind == parallel.nfz_case.kind);
      check_identical(to_report(serial), to_report(parallel));
    } catch (const InfeasibleError&) {
    }
  }
}

TEST_CASE("interior-station partition search: serial vs parallel") {
  Rng rng(23);
  Scenario s;
  s.length = 6.0;
  for (int i = 0; i < 5; ++i)
    s.uavs.push_back({i + 1, 2.5, 0.0, rng.uniform(700.0, 850.0)});
  check_identical(to_report(solve_colocated(s, ExecPolicy::Serial)),
                  to_report(solve_colocated(s, ExecPolicy::Parallel)));
}
