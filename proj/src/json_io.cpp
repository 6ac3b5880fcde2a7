#include "isurf/json_io.hpp"

namespace isurf {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where, std::string("missing field '") + key + "'");
  return *it;
}

Int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where, "expected an integer");
  return j.get<Int>();
}

std::vector<Int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of integers");
  std::vector<Int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where, "expected a string");
  return j.get<std::string>();
}

}  // namespace

json to_json(const IntersectionLattice& lat) {
  return {{"basis", lat.labels()}, {"gram", lat.gram()}};
}

IntersectionLattice lattice_from_json(const json& j, const std::string& where) {
  const auto& b = field(j, "basis", where);
  if (!b.is_array()) throw SchemaError(where + "/basis", "expected an array of strings");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < b.size(); ++i) labels.push_back(as_string(b[i], where + "/basis/" + std::to_string(i)));
  const auto& g = field(j, "gram", where);
  if (!g.is_array()) throw SchemaError(where + "/gram", "expected an array of rows");
  Matrix gram;
  for (std::size_t i = 0; i < g.size(); ++i) gram.push_back(int_list(g[i], where + "/gram/" + std::to_string(i)));
  try {
    return {labels, gram};
  } catch (const LatticeError& e) {
    throw SchemaError(where, e.what());
  }
}

json to_json(const SingularityGerm& g) {
  switch (g.kind) {
    case GermKind::SimpleElliptic: {
      json out = {{"kind", "simple_elliptic"}, {"m", g.m}};
      if (!g.j_tag.empty()) out["j"] = g.j_tag;
      return out;
    }
    case GermKind::Cusp:
      return {{"kind", "cusp"}, {"es", g.es}};
    case GermKind::Triangle:
      return {{"kind", "triangle"}, {"pqr", g.es}};
    case GermKind::RDP:
      return {{"kind", "rdp"}};
    case GermKind::Smooth:
      return {{"kind", "smooth"}};
  }
  return {};
}

SingularityGerm germ_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_germ(j.get<std::string>());
    } catch (const GermError& e) {
      throw SchemaError(where, e.what());
    }
  }
  const auto kind = as_string(field(j, "kind", where), where + "/kind");
  try {
    if (kind == "cusp") return normalize_cusp(int_list(field(j, "es", where), where + "/es"));
    if (kind == "simple_elliptic") {
      std::string tag;
      if (j.contains("j")) tag = as_string(j["j"], where + "/j");
      return SingularityGerm::simple_elliptic(as_int(field(j, "m", where), where + "/m"), tag);
    }
    if (kind == "triangle") return SingularityGerm::triangle(int_list(field(j, "pqr", where), where + "/pqr"));
    if (kind == "rdp") return SingularityGerm::rdp();
    if (kind == "smooth") return SingularityGerm::smooth();
  } catch (const GermError& e) {
    throw SchemaError(where, e.what());
  }
  throw SchemaError(where + "/kind", "unknown germ kind '" + kind + "'");
}

json to_json(const SurfaceModel& s) {
  json curves = json::array();
  for (const auto& c : s.curves) curves.push_back({{"name", c.name}, {"coeffs", c.coeffs}, {"tag", to_string(c.tag)}});
  json germs = json::array();
  for (const auto& g : s.germs) germs.push_back(to_json(g));
  json out = {{"lattice", to_json(*s.lattice)}, {"K", s.K},          {"chiO", s.chiO},
              {"curves", curves},               {"divisors", s.divisors}, {"germs", germs}};
  if (!s.name.empty()) out["name"] = s.name;
  if (!s.annotations.empty()) out["annotations"] = s.annotations;
  return out;
}

SurfaceModel model_from_json(const json& j, const std::string& where) {
  SurfaceModel s;
  if (j.contains("name")) s.name = as_string(j["name"], where + "/name");
  s.lattice = std::make_shared<IntersectionLattice>(lattice_from_json(field(j, "lattice", where), where + "/lattice"));
  s.K = int_list(field(j, "K", where), where + "/K");
  s.chiO = as_int(field(j, "chiO", where), where + "/chiO");
  const auto& cs = field(j, "curves", where);
  if (!cs.is_array()) throw SchemaError(where + "/curves", "expected an array");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string w = where + "/curves/" + std::to_string(i);
    Curve c;
    c.name = as_string(field(cs[i], "name", w), w + "/name");
    c.coeffs = int_list(field(cs[i], "coeffs", w), w + "/coeffs");
    if (cs[i].contains("tag")) {
      try {
        c.tag = parse_curve_tag(as_string(cs[i]["tag"], w + "/tag"));
      } catch (const DivisorError& e) {
        throw SchemaError(w + "/tag", e.what());
      }
    }
    s.curves.push_back(c);
  }
  const auto& ds = field(j, "divisors", where);
  if (!ds.is_array()) throw SchemaError(where + "/divisors", "expected an array of name lists");
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const std::string w = where + "/divisors/" + std::to_string(i);
    if (!ds[i].is_array()) throw SchemaError(w, "expected an array of curve names");
    std::vector<std::string> group;
    for (std::size_t k = 0; k < ds[i].size(); ++k) group.push_back(as_string(ds[i][k], w + "/" + std::to_string(k)));
    s.divisors.push_back(group);
  }
  const auto& gs = field(j, "germs", where);
  if (!gs.is_array()) throw SchemaError(where + "/germs", "expected an array");
  for (std::size_t i = 0; i < gs.size(); ++i) s.germs.push_back(germ_from_json(gs[i], where + "/germs/" + std::to_string(i)));
  if (j.contains("annotations")) {
    for (const auto& a : j["annotations"]) s.annotations.push_back(as_string(a, where + "/annotations"));
  }
  if (auto issues = model_issues(s); !issues.empty()) throw SchemaError(where, issues.front());
  return s;
}

}  // namespace isurf
