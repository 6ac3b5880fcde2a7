#pragma once

#include "isurf/divisor.hpp"
#include "isurf/germ.hpp"
#include "isurf/lattice.hpp"

#include <json.hpp>

#include <stdexcept>

namespace isurf {

// Input that fails schema validation. `where` is a JSON-pointer-like path.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& where, const std::string& what)
      : std::invalid_argument(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

nlohmann::json to_json(const IntersectionLattice& lat);
IntersectionLattice lattice_from_json(const nlohmann::json& j, const std::string& where = "/lattice");

nlohmann::json to_json(const SingularityGerm& g);
SingularityGerm germ_from_json(const nlohmann::json& j, const std::string& where = "/germ");

nlohmann::json to_json(const SurfaceModel& s);
SurfaceModel model_from_json(const nlohmann::json& j, const std::string& where = "");

}  // namespace isurf
