#include "isurf/config.hpp"

#include "isurf/adjacency.hpp"
#include "isurf/builders.hpp"

#include <algorithm>
#include <set>

namespace isurf {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string need_string(const json& j, const char* key, const std::string& where) {
  const auto& v = need(j, key, where);
  if (!v.is_string()) throw SchemaError(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

Int need_int(const json& j, const char* key, const std::string& where) {
  const auto& v = need(j, key, where);
  if (!v.is_number_integer()) throw SchemaError(where + "/" + key, "expected an integer");
  return v.get<Int>();
}

bool need_bool(const json& j, const char* key, const std::string& where) {
  const auto& v = need(j, key, where);
  if (!v.is_boolean()) throw SchemaError(where + "/" + key, "expected true or false");
  return v.get<bool>();
}

Rational need_rational(const json& j, const char* key, const std::string& where) {
  const auto& v = need(j, key, where);
  if (v.is_number_integer()) return Rational(v.get<Int>());
  if (v.is_string()) {
    try {
      return Rational(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw SchemaError(where + "/" + key, "expected an integer or a string \"p/q\"");
}

SurfaceModel build_from_json(const json& b, const std::string& where) {
  Stratum st;
  try {
    st = parse_stratum(need_string(b, "stratum", where));
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const SchemaError*>(&e)) throw;
    throw SchemaError(where + "/stratum", e.what());
  }
  StratumOptions opt;
  if (b.contains("germs")) {
    const auto& g = b["germs"];
    if (!g.is_array()) throw SchemaError(where + "/germs", "expected an array");
    for (std::size_t i = 0; i < g.size(); ++i) opt.germs.push_back(germ_from_json(g[i], where + "/germs/" + std::to_string(i)));
  }
  if (b.contains("realization")) {
    try {
      opt.realization = parse_realization(need_string(b, "realization", where));
    } catch (const BuilderError& e) {
      throw SchemaError(where + "/realization", e.what());
    }
  }
  try {
    return build_stratum(st, opt);
  } catch (const BuilderError& e) {
    throw SchemaError(where, e.what());
  } catch (const GermError& e) {
    throw SchemaError(where + "/germs", e.what());
  }
}

const SurfaceModel& surface_for(const CheckConfig& cfg, const json& c, const std::string& where) {
  const auto id = need_string(c, "surface", where);
  for (const auto& s : cfg.surfaces)
    if (s.id == id) return s.model;
  throw SchemaError(where + "/surface", "no surface with id '" + id + "'");
}

DivisorClass class_of(const SurfaceModel& s, const json& c, const char* key, const std::string& where) {
  const auto expr = need_string(c, key, where);
  try {
    return s.parse(expr);
  } catch (const DivisorError& e) {
    throw SchemaError(where + "/" + key, e.what());
  }
}

SingularityGerm germ_field(const json& c, const char* key, const std::string& where) {
  return germ_from_json(need(c, key, where), where + "/" + key);
}

Signature signature_field(const json& c, const std::string& where) {
  const auto& e = need(c, "expected", where);
  if (!e.is_array() || e.size() != 3) throw SchemaError(where + "/expected", "expected [positive, negative, null]");
  std::array<std::size_t, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!e[i].is_number_unsigned()) throw SchemaError(where + "/expected/" + std::to_string(i), "expected a count");
    v[i] = e[i].get<std::size_t>();
  }
  return {v[0], v[1], v[2]};
}

IntersectionLattice lattice_for_signature(const CheckConfig& cfg, const json& c, const std::string& where) {
  if (c.contains("lattice")) return lattice_from_json(c["lattice"], where + "/lattice");
  if (c.contains("named")) {
    const auto& n = c["named"];
    const auto w = where + "/named";
    const auto fam = parse_family(need_string(n, "family", w));
    if (!fam) throw SchemaError(w + "/family", "unknown lattice family");
    std::optional<Int> m;
    if (n.contains("m")) m = need_int(n, "m", w);
    const Int scale = n.contains("scale") ? need_int(n, "scale", w) : 1;
    try {
      return make_named_lattice(*fam, need_int(n, "n", w), m, scale);
    } catch (const LatticeError& e) {
      throw SchemaError(w, e.what());
    }
  }
  const auto& s = surface_for(cfg, c, where);
  if (c.contains("group")) {
    const Int g = need_int(c, "group", where);
    if (g < 1 || g > static_cast<Int>(s.k())) throw SchemaError(where + "/group", "group index out of range");
    return group_lattice(s, static_cast<std::size_t>(g - 1));
  }
  return *s.lattice;
}

void run_check(const CheckConfig& cfg, const json& c, std::size_t index, Report& rep) {
  const std::string where = "/checks/" + std::to_string(index);
  const auto kind = need_string(c, "check", where);
  const std::string id = c.contains("id") ? need_string(c, "id", where) : std::to_string(index + 1) + ":" + kind;
  auto cite = [&](const char* fallback) { return c.contains("citation") ? need_string(c, "citation", where) : fallback; };

  if (kind == "verify_I_surface") {
    rep.append(verify_I_surface(surface_for(cfg, c, where)), id + "/");
  } else if (kind == "pair") {
    const auto& s = surface_for(cfg, c, where);
    rep.expect(id, cite("Def 2.6"), need_int(c, "expected", where),
               pair(class_of(s, c, "a", where), class_of(s, c, "b", where)));
  } else if (kind == "class_expressions_agree") {
    const auto& s = surface_for(cfg, c, where);
    rep.expect(id, cite("Prop 6.3"), need_bool(c, "expected", where),
               class_expressions_agree(class_of(s, c, "a", where), class_of(s, c, "b", where), s));
  } else if (kind == "nef") {
    const auto& s = surface_for(cfg, c, where);
    const auto r = nef_check(class_of(s, c, "class", where), s);
    std::string detail;
    for (const auto& v : r.violated_by) detail += (detail.empty() ? "" : ",") + v;
    rep.expect(id, cite("Lemma 2.9"), need_bool(c, "expected", where), r.nef);
    if (!r.nef) rep.note(id + ": negative against " + detail + " (declared curves only)");
  } else if (kind == "adjunction_genus") {
    const auto& s = surface_for(cfg, c, where);
    const auto d = class_of(s, c, "class", where);
    const Int want = need_int(c, "expected", where);
    try {
      rep.expect(id, cite("Def 2.6"), want, adjunction_genus(d, s));
    } catch (const DivisorError& e) {
      rep.require(id, cite("Def 2.6"), false, e.what());
    }
  } else if (kind == "riemann_roch") {
    const auto& s = surface_for(cfg, c, where);
    rep.expect(id, cite("Thm 2.13"), need_rational(c, "expected", where),
               riemann_roch_chi(class_of(s, c, "class", where), s));
  } else if (kind == "signature") {
    const auto want = signature_field(c, where);
    rep.expect(id, cite("Lemma 5.2"), to_string(want), to_string(signature(lattice_for_signature(cfg, c, where))));
  } else if (kind == "is_adjacent") {
    const auto from = germ_field(c, "from", where), to = germ_field(c, "to", where);
    const bool want = need_bool(c, "expected", where);
    try {
      rep.expect(id, cite("Def 1.4"), want, is_adjacent(from, to));
    } catch (const GermError& e) {
      throw SchemaError(where, e.what());
    }
  } else if (kind == "cover_pairing") {
    const Int want = need_int(c, "expected", where);
    try {
      const auto dc = build_double_cover(need_int(c, "N", where), need_int(c, "k", where));
      rep.expect(id, cite("Sec 3.2"), want, cover_pairing(need_string(c, "a", where), need_string(c, "b", where), dc));
    } catch (const BuilderError& e) {
      throw SchemaError(where, e.what());
    }
  } else {
    throw SchemaError(where + "/check", "unknown check '" + kind + "'");
  }
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"verify_I_surface", "pair",         "class_expressions_agree",
                                                 "nef",              "adjunction_genus", "riemann_roch",
                                                 "signature",        "is_adjacent",  "cover_pairing"};
  return names;
}

CheckConfig parse_config(const json& j) {
  if (!j.is_object()) throw SchemaError("", "config must be a JSON object");
  static const std::set<std::string> known = {"surfaces", "checks", "output", "dot_path"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw SchemaError("/" + it.key(), "unknown top-level field");

  CheckConfig cfg;
  if (j.contains("surfaces")) {
    const auto& ss = j["surfaces"];
    if (!ss.is_array()) throw SchemaError("/surfaces", "expected an array");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const std::string w = "/surfaces/" + std::to_string(i);
      const auto id = need_string(ss[i], "id", w);
      if (!ids.insert(id).second) throw SchemaError(w + "/id", "duplicate surface id '" + id + "'");
      const bool has_build = ss[i].contains("build"), has_model = ss[i].contains("model");
      if (has_build == has_model) throw SchemaError(w, "give exactly one of 'build' and 'model'");
      auto model = has_build ? build_from_json(ss[i]["build"], w + "/build") : model_from_json(ss[i]["model"], w + "/model");
      if (model.name.empty()) model.name = id;
      cfg.surfaces.push_back({id, std::move(model)});
    }
  }
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) throw SchemaError("/checks", "expected an array");
    for (std::size_t i = 0; i < j["checks"].size(); ++i) {
      const auto& c = j["checks"][i];
      const std::string w = "/checks/" + std::to_string(i);
      const auto kind = need_string(c, "check", w);
      if (std::find(check_names().begin(), check_names().end(), kind) == check_names().end())
        throw SchemaError(w + "/check", "unknown check '" + kind + "'");
    }
    cfg.checks = j["checks"];
  } else {
    for (const auto& s : cfg.surfaces) cfg.checks.push_back({{"check", "verify_I_surface"}, {"surface", s.id}, {"id", s.id}});
  }
  if (j.contains("output")) {
    cfg.output = need_string(j, "output", "");
    if (cfg.output != "text" && cfg.output != "json") throw SchemaError("/output", "expected \"text\" or \"json\"");
  }
  if (j.contains("dot_path")) cfg.dot_path = need_string(j, "dot_path", "");
  return cfg;
}

Report run_config(const CheckConfig& cfg) {
  Report rep("config");
  for (std::size_t i = 0; i < cfg.checks.size(); ++i) run_check(cfg, cfg.checks[i], i, rep);
  return rep;
}

}  // namespace isurf
