#include "uavcover/scenario_io.hpp"

#include <algorithm>
#include <cmath>

namespace uavcover {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

double get_number(const json& j, const std::string& path, const char* key,
                  bool required, double fallback = 0.0) {
  if (!j.contains(key)) {
    if (required) fail(path + "." + key, "missing required number");
    return fallback;
  }
  const auto& v = j.at(key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

int get_int(const json& j, const std::string& path, const char* key,
            bool required, int fallback = 0) {
  if (!j.contains(key)) {
    if (required) fail(path + "." + key, "missing required integer");
    return fallback;
  }
  const auto& v = j.at(key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

CoverageModel parse_model(const json& j, const std::string& path) {
  CoverageModel m;  // defaults: alpha 1, beta 0.5, h* 2, w 0.2, c 21.6
  if (!j.contains("model")) return m;
  const auto& mj = j.at("model");
  if (!mj.is_object()) fail(path + ".model", "expected an object");
  m.alpha = get_number(mj, path + ".model", "alpha", false, m.alpha);
  m.beta = get_number(mj, path + ".model", "beta", false, m.beta);
  m.h_star = get_number(mj, path + ".model", "h_star", false, m.h_star);
  m.w = get_number(mj, path + ".model", "w", false, m.w);
  m.c = get_number(mj, path + ".model", "c", false, m.c);
  return m;
}

constexpr double kDefaultBattery = 780.0;

std::vector<UavSpec> parse_uavs(const json& j, const std::string& path,
                                double default_x, double default_y) {
  if (!j.is_array()) fail(path, "expected an array of UAVs");
  std::vector<UavSpec> uavs;
  int next_id = 1;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const auto& uj = j.at(i);
    if (!uj.is_object()) fail(p, "expected an object");
    UavSpec u;
    u.id = get_int(uj, p, "id", false, next_id);
    u.x = get_number(uj, p, "x", false, default_x);
    u.y = get_number(uj, p, "y", false, default_y);
    u.battery = get_number(uj, p, "battery", false, kDefaultBattery);
    uavs.push_back(u);
    next_id = u.id + 1;
  }
  return uavs;
}

std::vector<Nfz> parse_nfzs(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of zones");
  std::vector<Nfz> nfzs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const auto& zj = j.at(i);
    if (!zj.is_object()) fail(p, "expected an object");
    nfzs.push_back({get_number(zj, p, "left", true), get_number(zj, p, "right", true)});
  }
  std::sort(nfzs.begin(), nfzs.end(),
            [](const Nfz& a, const Nfz& b) { return a.left < b.left; });
  return nfzs;
}

Station parse_station(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) fail(path + "." + key, "missing required station");
  const auto& sj = j.at(key);
  if (!sj.is_object()) fail(path + "." + key, "expected an object");
  return {get_number(sj, path + "." + key, "x", true),
          get_number(sj, path + "." + key, "y", true)};
}

json model_json(const CoverageModel& m) {
  return {{"alpha", m.alpha}, {"beta", m.beta}, {"h_star", m.h_star},
          {"w", m.w},         {"c", m.c}};
}

json uavs_json(const std::vector<UavSpec>& uavs) {
  json arr = json::array();
  for (const auto& u : uavs)
    arr.push_back({{"id", u.id}, {"x", u.x}, {"y", u.y}, {"battery", u.battery}});
  return arr;
}

json nfzs_json(const std::vector<Nfz>& nfzs) {
  json arr = json::array();
  for (const auto& z : nfzs) arr.push_back({{"left", z.left}, {"right", z.right}});
  return arr;
}

const UavSpec* find_uav(const ScenarioFile& file, int id) {
  auto scan = [id](const std::vector<UavSpec>& v) -> const UavSpec* {
    for (const auto& u : v)
      if (u.id == id) return &u;
    return nullptr;
  };
  if (file.is_3d()) {
    if (const auto* u = scan(file.scenario3d.left_uavs)) return u;
    return scan(file.scenario3d.right_uavs);
  }
  return scan(file.scenario.uavs);
}

}  // namespace

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::Colocated: return "colocated";
    case Mode::Line: return "line";
    case Mode::Kappa: return "kappa";
    case Mode::ThreeD: return "3d";
    case Mode::Oracle: return "oracle";
  }
  return "?";
}

ScenarioFile parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("scenario: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("scenario", "expected a JSON object");

  ScenarioFile file;
  if (j.contains("version")) {
    if (!j.at("version").is_string()) fail("version", "expected a string");
    file.version = j.at("version").get<std::string>();
  }

  if (!j.contains("mode") || !j.at("mode").is_string())
    fail("mode", "missing required string");
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "colocated")
    file.mode = Mode::Colocated;
  else if (mode == "line")
    file.mode = Mode::Line;
  else if (mode == "kappa")
    file.mode = Mode::Kappa;
  else if (mode == "3d")
    file.mode = Mode::ThreeD;
  else if (mode == "oracle")
    file.mode = Mode::Oracle;
  else
    fail("mode", "unknown mode '" + mode +
                     "', allowed: colocated, line, kappa, 3d, oracle");

  if (j.contains("options")) {
    const auto& oj = j.at("options");
    if (!oj.is_object()) fail("options", "expected an object");
    file.options.epsilon = get_number(oj, "options", "epsilon", false, 1e-3);
    file.options.kappa = get_int(oj, "options", "kappa", false, 1);
    file.options.grid_dx = get_number(oj, "options", "grid_dx", false, 1e-3);
    file.options.grid_dh = get_number(oj, "options", "grid_dh", false, 1e-3);
  }

  if (file.mode == Mode::ThreeD) {
    Scenario3d& s = file.scenario3d;
    s.length = get_number(j, "scenario", "length", true);
    s.model = parse_model(j, "scenario");
    s.station_left = parse_station(j, "scenario", "station_left");
    s.station_right = parse_station(j, "scenario", "station_right");
    if (!j.contains("left_uavs") || !j.contains("right_uavs"))
      fail("scenario", "3d mode requires left_uavs and right_uavs");
    s.left_uavs = parse_uavs(j.at("left_uavs"), "left_uavs", s.station_left.x,
                             s.station_left.y);
    s.right_uavs = parse_uavs(j.at("right_uavs"), "right_uavs",
                              s.station_right.x, s.station_right.y);
    // Deployment-order invariants: left ascending, right descending battery.
    std::stable_sort(s.left_uavs.begin(), s.left_uavs.end(),
                     [](const UavSpec& a, const UavSpec& b) {
                       return a.battery < b.battery;
                     });
    std::stable_sort(s.right_uavs.begin(), s.right_uavs.end(),
                     [](const UavSpec& a, const UavSpec& b) {
                       return a.battery > b.battery;
                     });
    if (j.contains("nfzs")) s.nfzs = parse_nfzs(j.at("nfzs"), "nfzs");
    s.validate();
    return file;
  }

  Scenario& s = file.scenario;
  s.length = get_number(j, "scenario", "length", true);
  s.model = parse_model(j, "scenario");
  if (j.contains("uavs")) {
    s.uavs = parse_uavs(j.at("uavs"), "uavs", 0.0, 0.0);
  } else if (j.contains("n")) {
    const int n = get_int(j, "scenario", "n", true);
    if (n < 1) fail("n", "must be >= 1");
    for (int i = 0; i < n; ++i)
      s.uavs.push_back({i + 1, 0.0, 0.0, kDefaultBattery});
  } else {
    fail("scenario", "need either 'uavs' or the shorthand 'n'");
  }
  if (j.contains("nfzs")) s.nfzs = parse_nfzs(j.at("nfzs"), "nfzs");
  s.validate();
  return file;
}

json scenario_json(const ScenarioFile& file) {
  json j;
  j["version"] = file.version;
  j["mode"] = mode_name(file.mode);
  j["options"] = {{"epsilon", file.options.epsilon},
                  {"kappa", file.options.kappa},
                  {"grid_dx", file.options.grid_dx},
                  {"grid_dh", file.options.grid_dh}};
  if (file.is_3d()) {
    const auto& s = file.scenario3d;
    j["length"] = s.length;
    j["model"] = model_json(s.model);
    j["station_left"] = {{"x", s.station_left.x}, {"y", s.station_left.y}};
    j["station_right"] = {{"x", s.station_right.x}, {"y", s.station_right.y}};
    j["left_uavs"] = uavs_json(s.left_uavs);
    j["right_uavs"] = uavs_json(s.right_uavs);
    j["nfzs"] = nfzs_json(s.nfzs);
  } else {
    const auto& s = file.scenario;
    j["length"] = s.length;
    j["model"] = model_json(s.model);
    j["uavs"] = uavs_json(s.uavs);
    j["nfzs"] = nfzs_json(s.nfzs);
  }
  return j;
}

json result_json(const ScenarioFile& file, const SolveReport& report) {
  const CoverageModel& m =
      file.is_3d() ? file.scenario3d.model : file.scenario.model;
  const auto& nfzs = file.is_3d() ? file.scenario3d.nfzs : file.scenario.nfzs;

  json placements = json::array();
  for (const auto& p : report.placements) {
    const UavSpec* u = find_uav(file, p.uav_id);
    if (!u) throw ToleranceError("result: placement references unknown UAV id " +
                                 std::to_string(p.uav_id));
    const double d = p.deployed
                         ? travel_distance(m, u->x, u->y, p.x_final, p.y_final,
                                           p.altitude)
                         : 0.0;
    const double lo = leftover(m, u->battery, d);
    if (std::abs(d - p.distance) > 1e-9 || std::abs(lo - p.leftover) > 1e-9)
      throw ToleranceError("result: placement for UAV " +
                           std::to_string(p.uav_id) +
                           " does not reproduce through the model");
    if (p.deployed) {
      if (std::abs(radius(m, p.altitude) - p.radius) > 1e-9)
        throw ToleranceError("result: radius mismatch for UAV " +
                             std::to_string(p.uav_id));
      for (const auto& z : nfzs)
        if (z.contains_strictly(p.x_final))
          throw ToleranceError("result: UAV " + std::to_string(p.uav_id) +
                               " placed inside a no-fly zone");
    }
    placements.push_back({{"id", p.uav_id},
                          {"x", p.x_final},
                          {"y", p.y_final},
                          {"altitude", p.altitude},
                          {"radius", p.radius},
                          {"distance", p.distance},
                          {"leftover", p.leftover},
                          {"deployed", p.deployed}});
  }
  if (report.bhat != bottleneck_leftover(report.placements))
    throw ToleranceError("result: bhat does not equal the bottleneck leftover");

  json j;
  j["version"] = "1";
  j["mode"] = mode_name(file.mode);
  j["bhat"] = report.bhat;
  j["placements"] = placements;
  j["diagnostics"] = {{"epsilon", report.diagnostics.epsilon},
                      {"iterations", report.diagnostics.iterations},
                      {"probes", report.diagnostics.probes},
                      {"wall_ms", report.diagnostics.wall_ms}};
  j["scenario"] = scenario_json(file);
  return j;
}

}  // namespace uavcover
