#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "uavcover/cli.hpp"
#include "uavcover/scenario_io.hpp"

using namespace uavcover;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "cli_test_" + name + ".json";
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(std::vector<std::string>(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json strip_timing(json j) {
  if (j.contains("diagnostics")) j["diagnostics"]["wall_ms"] = 0.0;
  return j;
}

}  // namespace

TEST_CASE("minimal colocated file gets the documented defaults") {
  const auto file =
      parse_scenario(R"({"mode": "colocated", "length": 2.0, "n": 2})");
  CHECK(file.mode == Mode::Colocated);
  REQUIRE(file.scenario.uavs.size() == 2);
  CHECK(file.scenario.uavs[0].battery == 780.0);
  CHECK(file.scenario.uavs[1].id == 2);
  CHECK(file.scenario.model.alpha == 1.0);
  CHECK(file.scenario.model.beta == 0.5);
  CHECK(file.scenario.model.h_star == 2.0);
  CHECK(file.scenario.model.w == 0.2);
  CHECK(file.scenario.model.c == 21.6);
}

TEST_CASE("overlapping zones are rejected with a field path") {
  const std::string text = R"({
    "mode": "line", "length": 20.0, "n": 10,
    "nfzs": [{"left": 10, "right": 13}, {"left": 12, "right": 15}]
  })";
  CHECK_THROWS_WITH_AS(parse_scenario(text),
                       "nfzs[1]: overlaps previous no-fly zone", InputError);
}

TEST_CASE("unknown mode names the allowed ones") {
  try {
    parse_scenario(R"({"mode": "swarm", "length": 1.0, "n": 1})");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    const std::string what = e.what();
    CHECK(what.find("colocated") != std::string::npos);
    CHECK(what.find("line") != std::string::npos);
    CHECK(what.find("kappa") != std::string::npos);
    CHECK(what.find("3d") != std::string::npos);
    CHECK(what.find("oracle") != std::string::npos);
  }
}

TEST_CASE("parse round trip is semantically stable") {
  const std::string text = R"({
    "mode": "kappa", "length": 8.5,
    "uavs": [{"id": 3, "x": 1.5, "battery": 700}, {"x": 4.0}],
    "nfzs": [{"left": 2.0, "right": 3.0}],
    "options": {"epsilon": 0.01, "kappa": 2}
  })";
  const auto file = parse_scenario(text);
  const auto echoed = scenario_json(file).dump();
  const auto file2 = parse_scenario(echoed);
  CHECK(scenario_json(file2).dump() == echoed);
  CHECK(file2.options.kappa == 2);
  CHECK(file2.scenario.uavs[1].id == 4);  // ids continue after explicit ones
  CHECK(file2.scenario.uavs[1].battery == 780.0);
}

TEST_CASE("3d files parse and normalize fleet order") {
  const std::string text = R"({
    "mode": "3d", "length": 10.0,
    "station_left": {"x": 0, "y": 0}, "station_right": {"x": 10, "y": 1},
    "left_uavs": [{"battery": 800}, {"battery": 700}],
    "right_uavs": [{"battery": 700}, {"battery": 800}]
  })";
  const auto file = parse_scenario(text);
  REQUIRE(file.is_3d());
  CHECK(file.scenario3d.left_uavs[0].battery == 700.0);   // ascending
  CHECK(file.scenario3d.right_uavs[0].battery == 800.0);  // descending
  CHECK(file.scenario3d.right_uavs[0].x == 10.0);
  CHECK(file.scenario3d.right_uavs[0].y == 1.0);
}

TEST_CASE("solve command emits a validated result") {
  const auto path = write_temp(
      "solve", R"({"mode": "colocated", "length": 2.0, "n": 2})");
  const auto r = run({"solve", path});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("mode") == "colocated");
  CHECK(j.at("bhat").get<double>() == doctest::Approx(769.632));
  CHECK(j.at("placements").size() == 2);
  CHECK(j.at("scenario").at("length") == 2.0);
  std::remove(path.c_str());
}

TEST_CASE("infeasible solves exit with code 2") {
  const auto path = write_temp(
      "infeasible", R"({"mode": "colocated", "length": 20.0, "n": 2})");
  const auto r = run({"solve", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("infeasible") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("schema violations exit with code 3") {
  const auto path = write_temp("badmode", R"({"mode": "noidea", "length": 1})");
  CHECK(run({"solve", path}).code == 3);
  CHECK(run({"solve", "no_such_file.json"}).code == 3);
  std::remove(path.c_str());
}

TEST_CASE("check command reports feasibility") {
  const auto path = write_temp(
      "check", R"({"mode": "line", "length": 2.0,
                   "uavs": [{"x": 1.0}]})");
  const auto yes = run({"check", path, "--leftover", "750"});
  REQUIRE(yes.code == 0);
  CHECK(json::parse(yes.out).at("feasible") == true);
  const auto no = run({"check", path, "--leftover", "779"});
  REQUIRE(no.code == 0);
  CHECK(json::parse(no.out).at("feasible") == false);
  std::remove(path.c_str());
}

TEST_CASE("oracle command runs the ground truth") {
  const auto path = write_temp(
      "oracle", R"({"mode": "oracle", "length": 1.0, "n": 1,
                    "options": {"grid_dx": 0.005, "grid_dh": 0.005}})");
  const auto r = run({"oracle", path});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const double expect = 780.0 - 21.6 * (0.2 * 0.5 + 0.25);
  CHECK(j.at("bhat").get<double>() ==
        doctest::Approx(expect).epsilon(1e-3));

  // solve dispatches oracle-mode files to the same engine
  const auto via_solve = run({"solve", path});
  REQUIRE(via_solve.code == 0);
  CHECK(json::parse(via_solve.out).at("bhat") == j.at("bhat"));
  std::remove(path.c_str());
}

TEST_CASE("bench figure 7 emits the documented CSV") {
  const auto r = run({"bench", "--figure", "7", "--n-max", "9"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,bhat_no_nfz,bhat_nfz");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row))
    if (!row.empty()) ++rows;
  CHECK(rows == 2);  // n = 8, 9
}

TEST_CASE("sweep figure 10 emits the documented CSV") {
  const auto r = run({"sweep", "--figure", "10", "--n", "10", "--epsilon", "0.01"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "left_count,bhat");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row))
    if (!row.empty()) ++rows;
  CHECK(rows == 9);
}

TEST_CASE("fixed seeds make runs byte-identical") {
  const auto path = write_temp(
      "det", R"({"mode": "kappa", "length": 9.0,
                 "uavs": [{"x": 0.5, "battery": 650}, {"x": 4.0, "battery": 900},
                          {"x": 6.5, "battery": 700}, {"x": 8.0, "battery": 820}],
                 "options": {"epsilon": 0.001, "kappa": 2}})");
  const auto a = run({"solve", path});
  const auto b = run({"solve", path});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(strip_timing(json::parse(a.out)).dump() ==
        strip_timing(json::parse(b.out)).dump());
  std::remove(path.c_str());

  const auto c1 = run({"bench", "--figure", "9", "--seed", "11", "--epsilon", "0.01"});
  const auto c2 = run({"bench", "--figure", "9", "--seed", "11", "--epsilon", "0.01"});
  REQUIRE(c1.code == 0);
  CHECK(c1.out == c2.out);
}
