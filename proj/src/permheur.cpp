#include "uavcover/permheur.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uavcover {

std::vector<std::vector<int>> enumerate_orders(int n, int kappa,
                                               std::span<const int> base) {
  if (kappa < 0 || kappa > n) throw InputError("kappa: must be in [0, n]");
  if (static_cast<int>(base.size()) != n)
    throw InputError("enumerate_orders: base order size mismatch");

  std::vector<int> order(base.begin(), base.end());
  std::set<std::vector<int>> unique;
  unique.insert(order);
  if (kappa >= 2) {
    // Choose kappa slot positions, permute their occupants in place.
    std::vector<int> slots(kappa);
    for (int i = 0; i < kappa; ++i) slots[i] = i;
    while (true) {
      std::vector<int> occupants(kappa);
      for (int i = 0; i < kappa; ++i) occupants[i] = order[slots[i]];
      std::sort(occupants.begin(), occupants.end());
      do {
        std::vector<int> candidate = order;
        for (int i = 0; i < kappa; ++i) candidate[slots[i]] = occupants[i];
        unique.insert(std::move(candidate));
      } while (std::next_permutation(occupants.begin(), occupants.end()));

      // next combination
      int i = kappa - 1;
      while (i >= 0 && slots[i] == n - kappa + i) --i;
      if (i < 0) break;
      ++slots[i];
      for (int j = i + 1; j < kappa; ++j) slots[j] = slots[j - 1] + 1;
    }
  }
  return {unique.begin(), unique.end()};
}

SolveReport solve_kappa(const Scenario& scenario, int kappa, double epsilon,
                        ExecPolicy policy) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw InputError("epsilon: must be in (0, 1)");
  scenario.validate();
  const auto t0 = std::chrono::steady_clock::now();

  const int n = static_cast<int>(scenario.uavs.size());
  const auto base = base_order(scenario);
  const auto orders = enumerate_orders(n, kappa, base);
  const SearchGrid grid = search_bounds(scenario, epsilon);

  std::vector<double> values(orders.size(),
                             -std::numeric_limits<double>::infinity());
  std::vector<std::int64_t> probes(orders.size(), 0);

  auto eval = [&](std::size_t i) {
    try {
      SolveReport r = solve_fixed_order(scenario, orders[i], epsilon, &grid);
      values[i] = r.bhat;
      probes[i] = r.diagnostics.probes;
    } catch (const InfeasibleError&) {
    }
  };

  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < orders.size(); ++i) eval(i);
  } else {
    for (std::size_t i = 0; i < orders.size(); ++i) eval(i);
  }

  std::size_t best = orders.size();
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (values[i] == -std::numeric_limits<double>::infinity()) continue;
    if (best == orders.size() || values[i] > values[best]) best = i;
  }
  if (best == orders.size())
    throw InfeasibleError("solve_kappa: no deployment order admits coverage");

  SolveReport report = solve_fixed_order(scenario, orders[best], epsilon, &grid);
  report.diagnostics.epsilon = epsilon;
  report.diagnostics.probes = 0;
  for (auto p : probes) report.diagnostics.probes += p;
  report.diagnostics.iterations = static_cast<std::int64_t>(orders.size());
  report.diagnostics.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace uavcover
