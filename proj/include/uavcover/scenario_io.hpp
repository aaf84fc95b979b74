#pragma once

#include <string>

#include <json.hpp>

#include "uavcover/deploy3d.hpp"
#include "uavcover/model.hpp"

namespace uavcover {

enum class Mode { Colocated, Line, Kappa, ThreeD, Oracle };

const char* mode_name(Mode mode);

struct SolverOptions {
  double epsilon = 1e-3;
  int kappa = 1;
  double grid_dx = 1e-3;
  double grid_dh = 1e-3;
};

// A parsed scenario file: one of the 1D modes carries `scenario`, the 3d
// mode carries `scenario3d`.
struct ScenarioFile {
  std::string version = "1";
  Mode mode = Mode::Line;
  Scenario scenario;
  Scenario3d scenario3d;
  SolverOptions options;

  bool is_3d() const { return mode == Mode::ThreeD; }
};

// Parses and validates UTF-8 JSON text, injecting the documented defaults.
// Throws InputError with the offending field path.
ScenarioFile parse_scenario(const std::string& text);

// Normalized echo of a parsed scenario (defaults made explicit).
nlohmann::json scenario_json(const ScenarioFile& file);

// Result payload: bottleneck leftover, placements, diagnostics, input echo.
// Re-validates every placement against the model and the no-fly zones before
// serializing; throws ToleranceError when a placement does not reproduce.
nlohmann::json result_json(const ScenarioFile& file, const SolveReport& report);

}  // namespace uavcover
