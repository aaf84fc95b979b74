#include "uavcover/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "uavcover/colocated.hpp"
#include "uavcover/deploy3d.hpp"
#include "uavcover/linedeploy.hpp"
#include "uavcover/oracle.hpp"
#include "uavcover/permheur.hpp"
#include "uavcover/rng.hpp"
#include "uavcover/scenario_io.hpp"

namespace uavcover {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& payload, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot open output file: " + out_path);
  f << payload;
  if (payload.empty() || payload.back() != '\n') f << "\n";
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

SolveReport dispatch_solve(const ScenarioFile& file, ExecPolicy policy) {
  switch (file.mode) {
    case Mode::Colocated:
      return to_report(solve_colocated(file.scenario, policy));
    case Mode::Line:
      return solve_line(file.scenario, file.options.epsilon);
    case Mode::Kappa:
      return solve_kappa(file.scenario, file.options.kappa,
                         file.options.epsilon, policy);
    case Mode::ThreeD:
      return solve_3d(file.scenario3d, file.options.epsilon);
    case Mode::Oracle:
      return brute_force(file.scenario,
                         {file.options.grid_dx, file.options.grid_dh}, policy);
  }
  throw InputError("unknown mode");
}

// Zone width stays below 2 * r(h_star) so a UAV pair can bridge it under the
// default model.
Scenario colocated_bench_scenario(int n, bool with_nfz) {
  Scenario s;
  s.length = 20.0;
  if (with_nfz) s.nfzs.push_back({10.0, 12.5});
  for (int i = 0; i < n; ++i) s.uavs.push_back({i + 1, 0.0, 0.0, 780.0});
  return s;
}

Scenario spread_scenario(int n, double length, double battery) {
  Scenario s;
  s.length = length;
  for (int i = 0; i < n; ++i) {
    const double x = n == 1 ? length / 2.0
                            : length * static_cast<double>(i) / (n - 1);
    s.uavs.push_back({i + 1, x, 0.0, battery});
  }
  return s;
}

// Sweep points are independent; rows are emitted in n order regardless of
// which thread finished first.
std::string bench_figure7(int n_max, ExecPolicy policy) {
  Scenario probe = colocated_bench_scenario(1, false);
  const int n_min = std::max(
      1, static_cast<int>(std::ceil(probe.length / (2.0 * probe.model.max_radius()))));
  const int rows = std::max(0, n_max - n_min + 1);
  std::vector<std::string> lines(rows);
  auto eval = [&](int i) {
    const int n = n_min + i;
    const auto plain =
        solve_colocated(colocated_bench_scenario(n, false), ExecPolicy::Serial);
    const auto zoned =
        solve_colocated(colocated_bench_scenario(n, true), ExecPolicy::Serial);
    lines[i] = std::to_string(n) + "," + fmt(plain.bhat) + "," + fmt(zoned.bhat);
  };
  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < rows; ++i) eval(i);
  } else {
    for (int i = 0; i < rows; ++i) eval(i);
  }
  std::ostringstream csv;
  csv << "n,bhat_no_nfz,bhat_nfz\n";
  for (const auto& line : lines) csv << line << "\n";
  return csv.str();
}

std::string bench_figure8(int n_max) {
  std::ostringstream csv;
  csv << "n,epsilon,ms\n";
  for (int n : {8, 16, 32, 64}) {
    if (n > n_max) continue;
    Scenario s = spread_scenario(n, 20.0, 780.0);
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      const auto report = solve_line(s, eps);
      csv << n << "," << fmt(eps) << "," << fmt(report.diagnostics.wall_ms)
          << "\n";
    }
  }
  return csv.str();
}

std::string bench_figure9(std::uint64_t seed, double epsilon, ExecPolicy policy) {
  Rng rng(seed);
  Scenario s;
  s.length = 12.0;
  const int n = 6;
  for (int i = 0; i < n; ++i)
    s.uavs.push_back({i + 1, rng.uniform(0.0, s.length), 0.0,
                      rng.uniform(650.0, 900.0)});
  std::ostringstream csv;
  csv << "kappa,bhat\n";
  for (int kappa = 0; kappa <= 4; ++kappa) {
    const auto report = solve_kappa(s, kappa, epsilon, policy);
    csv << kappa << "," << fmt(report.bhat) << "\n";
  }
  return csv.str();
}

std::string sweep_figure10(int n, double epsilon, ExecPolicy policy) {
  std::vector<std::string> lines(n - 1);
  auto eval = [&](int k) {
    Scenario3d s;
    s.length = 20.0;
    s.station_left = {0.0, 0.0};
    s.station_right = {20.0, 0.0};
    for (int i = 0; i < k; ++i) s.left_uavs.push_back({i + 1, 0.0, 0.0, 780.0});
    for (int i = k; i < n; ++i)
      s.right_uavs.push_back({i + 1, 20.0, 0.0, 780.0});
    const auto report = solve_3d(s, epsilon);
    lines[k - 1] = std::to_string(k) + "," + fmt(report.bhat);
  };
  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int k = 1; k <= n - 1; ++k) eval(k);
  } else {
    for (int k = 1; k <= n - 1; ++k) eval(k);
  }
  std::ostringstream csv;
  csv << "left_count,bhat\n";
  for (const auto& line : lines) csv << line << "\n";
  return csv.str();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"energy-optimal UAV swarm coverage solver"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  double flag_epsilon = -1.0, flag_leftover = 0.0;
  double flag_dx = -1.0, flag_dh = -1.0;
  int flag_kappa = -1, flag_nmax = 0, flag_n = 10;
  int flag_figure = 0;
  std::uint64_t flag_seed = 0;
  bool flag_serial = false;

  auto add_tolerance_flags = [&](CLI::App* cmd) {
    cmd->add_option("--b-low-floor", tol::b_low_floor,
                    "fallback search lower bound, Wh")
        ->capture_default_str();
    cmd->add_option("--tol-energy", tol::energy_abs,
                    "leftover bisection tolerance, Wh")
        ->capture_default_str();
    cmd->add_option("--tol-altitude", tol::altitude_abs,
                    "altitude bisection tolerance, km")
        ->capture_default_str();
    cmd->add_option("--tol-golden", tol::golden_xy,
                    "planar placement search tolerance, km")
        ->capture_default_str();
    cmd->add_option("--tol-golden-3d", tol::golden_3d,
                    "3D placement search tolerance, km")
        ->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "solve a scenario file");
  solve->add_option("scenario", scenario_path, "scenario JSON file")->required();
  solve->add_option("--epsilon", flag_epsilon, "relative error of the grid search");
  solve->add_option("--kappa", flag_kappa, "order-changing degree (kappa mode)");
  solve->add_option("--grid-dx", flag_dx, "oracle ground grid step, km");
  solve->add_option("--grid-dh", flag_dh, "oracle altitude grid step, km");
  solve->add_option("--seed", flag_seed, "accepted for interface parity; solves are deterministic");
  solve->add_option("--out", out_path, "write the result here instead of stdout");
  solve->add_flag("--serial", flag_serial, "run data-parallel kernels serially");
  add_tolerance_flags(solve);

  auto* check = app.add_subcommand("check", "feasibility of a leftover target");
  check->add_option("scenario", scenario_path)->required();
  check->add_option("--leftover", flag_leftover, "leftover target, Wh")->required();
  check->add_option("--out", out_path);
  add_tolerance_flags(check);

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->add_option("scenario", scenario_path)->required();
  oracle->add_option("--grid-dx", flag_dx);
  oracle->add_option("--grid-dh", flag_dh);
  oracle->add_option("--out", out_path);
  oracle->add_flag("--serial", flag_serial);

  auto* bench = app.add_subcommand("bench", "experiment sweeps, CSV output");
  bench->add_option("--figure", flag_figure, "7, 8 or 9")->required();
  bench->add_option("--n-max", flag_nmax, "largest swarm size");
  bench->add_option("--seed", flag_seed, "random seed for generated instances");
  bench->add_option("--epsilon", flag_epsilon);
  bench->add_option("--out", out_path);
  bench->add_flag("--serial", flag_serial);
  add_tolerance_flags(bench);

  auto* sweep = app.add_subcommand("sweep", "station-split sweep, CSV output");
  sweep->add_option("--figure", flag_figure, "10")->required();
  sweep->add_option("--n", flag_n, "total number of UAVs");
  sweep->add_option("--seed", flag_seed);
  sweep->add_option("--epsilon", flag_epsilon);
  sweep->add_option("--out", out_path);
  sweep->add_flag("--serial", flag_serial);
  add_tolerance_flags(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 3;
  }

  const ExecPolicy policy = flag_serial ? ExecPolicy::Serial : ExecPolicy::Parallel;

  if (solve->parsed() || check->parsed() || oracle->parsed()) {
    ScenarioFile file = parse_scenario(read_file(scenario_path));
    if (flag_epsilon > 0.0) file.options.epsilon = flag_epsilon;
    if (flag_kappa >= 0) file.options.kappa = flag_kappa;
    if (flag_dx > 0.0) file.options.grid_dx = flag_dx;
    if (flag_dh > 0.0) file.options.grid_dh = flag_dh;

    if (check->parsed()) {
      if (file.is_3d())
        throw InputError("check: only 1D scenario modes are supported");
      const auto outcome = check_feasible(file.scenario, flag_leftover);
      nlohmann::json j;
      j["feasible"] = outcome.feasible;
      j["frontier"] = outcome.frontier;
      j["leftover_target"] = flag_leftover;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& p : outcome.placements)
        arr.push_back({{"id", p.uav_id},
                       {"x", p.x_final},
                       {"altitude", p.altitude},
                       {"leftover", p.leftover},
                       {"deployed", p.deployed}});
      j["placements"] = arr;
      emit(j.dump(2), out_path, out);
      return 0;
    }

    SolveReport report;
    const auto t0 = std::chrono::steady_clock::now();
    if (oracle->parsed()) {
      if (file.is_3d())
        throw InputError("oracle: only 1D scenario modes are supported");
      report = brute_force(file.scenario,
                           {file.options.grid_dx, file.options.grid_dh}, policy);
    } else {
      report = dispatch_solve(file, policy);
    }
    report.diagnostics.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  t0)
            .count();
    emit(result_json(file, report).dump(2), out_path, out);
    return 0;
  }

  if (bench->parsed()) {
    const double eps = flag_epsilon > 0.0 ? flag_epsilon : 1e-3;
    std::string csv;
    if (flag_figure == 7)
      csv = bench_figure7(flag_nmax > 0 ? flag_nmax : 16, policy);
    else if (flag_figure == 8)
      csv = bench_figure8(flag_nmax > 0 ? flag_nmax : 64);
    else if (flag_figure == 9)
      csv = bench_figure9(flag_seed, eps, policy);
    else
      throw InputError("bench: --figure must be 7, 8 or 9");
    emit(csv, out_path, out);
    return 0;
  }

  if (sweep->parsed()) {
    if (flag_figure != 10) throw InputError("sweep: --figure must be 10");
    if (flag_n < 2) throw InputError("sweep: --n must be >= 2");
    const double eps = flag_epsilon > 0.0 ? flag_epsilon : 1e-3;
    emit(sweep_figure10(flag_n, eps, policy), out_path, out);
    return 0;
  }

  return 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const ToleranceError& e) {
    err << "tolerance failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace uavcover
