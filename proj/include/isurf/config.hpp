#pragma once

#include "isurf/json_io.hpp"
#include "isurf/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isurf {

// Config layout:
// {
//   "surfaces": [ {"id": "y", "build": {"stratum": "N_2", "germs": ["se:2"], "realization": "generic"}},
//                 {"id": "z", "model": { ...SurfaceModel JSON... }} ],
//   "checks":   [ {"surface": "y", "check": "pair", "a": "L", "b": "L", "expected": 1}, ... ],
//   "output":   "text" | "json",
//   "dot_path": "strata.dot"
// }
// Without "checks", every surface gets verify_I_surface.
struct NamedSurface {
  std::string id;
  SurfaceModel model;
};

struct CheckConfig {
  std::vector<NamedSurface> surfaces;
  nlohmann::json checks = nlohmann::json::array();
  std::string output = "text";
  std::optional<std::string> dot_path;
};

// Throws SchemaError with the offending location.
CheckConfig parse_config(const nlohmann::json& j);

// Check parameters are validated here too, so SchemaError may still escape.
Report run_config(const CheckConfig& cfg);

const std::vector<std::string>& check_names();

}  // namespace isurf
