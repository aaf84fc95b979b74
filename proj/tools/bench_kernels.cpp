// Timing comparison of the OpenMP kernels against their serial reference:
// the oracle layer scan, the permutation-heuristic sequence loop, and the
// colocated no-fly-zone case scan.

#include <chrono>
#include <cstdio>
#include <functional>

#include "uavcover/colocated.hpp"
#include "uavcover/oracle.hpp"
#include "uavcover/permheur.hpp"
#include "uavcover/rng.hpp"

using namespace uavcover;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-24s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    Scenario s;
    s.length = 1.6;
    Rng rng(7);
    for (int i = 0; i < 3; ++i)
      s.uavs.push_back({i + 1, rng.uniform(0.0, s.length), 0.0, 780.0});
    const GridSpec grid{2e-3, 2e-3};
    double bhat_serial = 0.0, bhat_parallel = 0.0;
    const double ts = time_ms(
        [&] { bhat_serial = brute_force(s, grid, ExecPolicy::Serial).bhat; }, 3);
    const double tp = time_ms(
        [&] { bhat_parallel = brute_force(s, grid, ExecPolicy::Parallel).bhat; }, 3);
    row("oracle layer scan", ts, tp);
    if (bhat_serial != bhat_parallel) {
      std::printf("MISMATCH: %.12f vs %.12f\n", bhat_serial, bhat_parallel);
      return 1;
    }
  }

  {
    Scenario s;
    s.length = 14.0;
    Rng rng(11);
    for (int i = 0; i < 7; ++i)
      s.uavs.push_back({i + 1, rng.uniform(0.0, s.length), 0.0,
                        rng.uniform(650.0, 900.0)});
    double bs = 0.0, bp = 0.0;
    const double ts =
        time_ms([&] { bs = solve_kappa(s, 4, 1e-3, ExecPolicy::Serial).bhat; }, 3);
    const double tp =
        time_ms([&] { bp = solve_kappa(s, 4, 1e-3, ExecPolicy::Parallel).bhat; }, 3);
    row("kappa sequence loop", ts, tp);
    if (bs != bp) {
      std::printf("MISMATCH: %.12f vs %.12f\n", bs, bp);
      return 1;
    }
  }

  {
    Scenario s;
    s.length = 20.0;
    s.nfzs.push_back({10.0, 12.5});
    Rng rng(13);
    for (int i = 0; i < 24; ++i)
      s.uavs.push_back({i + 1, 0.0, 0.0, rng.uniform(770.0, 790.0)});
    double bs = 0.0, bp = 0.0;
    const double ts =
        time_ms([&] { bs = solve_colocated(s, ExecPolicy::Serial).bhat; }, 3);
    const double tp =
        time_ms([&] { bp = solve_colocated(s, ExecPolicy::Parallel).bhat; }, 3);
    row("nfz case scan", ts, tp);
    if (bs != bp) {
      std::printf("MISMATCH: %.12f vs %.12f\n", bs, bp);
      return 1;
    }
  }

  return 0;
}
