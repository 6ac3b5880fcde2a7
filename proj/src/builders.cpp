#include "isurf/builders.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace isurf {

std::string to_string(Realization r) {
  switch (r) {
    case Realization::Generic: return "generic";
    case Realization::NodeOfFiber: return "node-of-fiber";
    case Realization::NodeOfBisection: return "node-of-bisection";
  }
  return "?";
}

Realization parse_realization(const std::string& s) {
  for (auto r : {Realization::Generic, Realization::NodeOfFiber, Realization::NodeOfBisection})
    if (to_string(r) == s) return r;
  throw BuilderError("unknown realization '" + s + "'");
}

SurfaceModel projective_plane() {
  SurfaceModel s;
  s.name = "P2";
  s.lattice = std::make_shared<IntersectionLattice>(std::vector<std::string>{"H"}, Matrix{{1}});
  s.K = {-3};
  s.chiO = 1;
  s.curves = {{"line", {1}, CurveTag::Other}};
  return s;
}

SurfaceModel ruled_surface_x1() {
  SurfaceModel s;
  s.name = "X1";
  s.lattice = std::make_shared<IntersectionLattice>(std::vector<std::string>{"sigma", "f"}, Matrix{{1, 1}, {1, 0}});
  s.K = {-2, 1};
  s.chiO = 0;
  s.curves = {{"sigma_p0", {1, 0}, CurveTag::Section}, {"fiber", {0, 1}, CurveTag::FiberComponent}};
  return s;
}

SurfaceModel rational_elliptic_with_half_fiber() {
  SurfaceModel s;
  s.name = "X0";
  s.lattice = std::make_shared<IntersectionLattice>(std::vector<std::string>{"F", "E"}, Matrix{{0, 1}, {1, -1}});
  s.K = {-1, 0};
  s.chiO = 1;
  s.curves = {{"F", {1, 0}, CurveTag::Other}, {"E", {0, 1}, CurveTag::Exceptional}};
  return s;
}

namespace {

struct Shape {
  bool irreducible;
  Int m;
  std::vector<Int> es;  // cycle order; {m} when irreducible
};

Shape shape_of(const SingularityGerm& g) {
  if (!g.is_elliptic()) throw BuilderError("marked points must be simple elliptic or cusp, got " + to_string(g));
  const Int m = multiplicity(g);
  if (g.kind == GermKind::SimpleElliptic || g.es.size() == 1) return {true, m, {m}};
  return {false, m, g.es};
}

// One component index per unit of multiplicity: where exceptional curves meet the cycle.
std::vector<std::size_t> slots(const Shape& s) {
  if (s.irreducible) return std::vector<std::size_t>(static_cast<std::size_t>(s.m), 0);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.es.size(); ++i)
    for (Int k = 2; k < s.es[i]; ++k) out.push_back(i);
  return out;
}

// Collects a pre-blowup surface whose marked curves are basis vectors.
class Assembler {
 public:
  void basis(const std::string& label, Int square, std::optional<CurveTag> tag = std::nullopt) {
    labels_.push_back(label);
    for (auto& row : gram_) row.push_back(0);
    gram_.emplace_back(labels_.size(), 0);
    gram_.back().back() = square;
    if (tag) curve_labels_.emplace_back(label, *tag);
  }

  // Components carry the resolution Gram; planned blowups restore the pre-blowup values.
  std::vector<std::string> group(const std::string& name, const SingularityGerm& g, CurveTag special, CurveTag rest) {
    const Shape sh = shape_of(g);
    const auto res = resolution_lattice(g);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < sh.es.size(); ++i) {
      names.push_back(sh.irreducible ? name : name + "_" + std::to_string(i + 1));
      basis(names.back(), 0, (sh.irreducible || sh.es[i] >= 3) ? special : rest);
    }
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = 0; j < names.size(); ++j) gram_[idx(names[i])][idx(names[j])] = res.at(i, j);
    groups_.push_back(names);
    germs_.push_back(g);
    return names;
  }

  void pairing(const std::string& a, const std::string& b, Int v) {
    gram_[idx(a)][idx(b)] += v;
    if (a != b) gram_[idx(b)][idx(a)] += v;
  }

  // Points on basis curves raise their pre-blowup pairings by mu_a * mu_b.
  void plan_blowup(const std::string& label, std::map<std::string, Int> mu) {
    for (const auto& [a, x] : mu)
      for (const auto& [b, y] : mu)
        if (index(a) && index(b)) gram_[idx(a)][idx(b)] += x * y;
    blowups_.emplace_back(label, std::move(mu));
  }

  void extra_curve(const std::string& name, std::map<std::string, Int> combo, CurveTag tag) {
    extra_.push_back({name, std::move(combo), tag});
  }

  SurfaceModel pre_model(const std::string& name, const std::map<std::string, Int>& K, Int chi) const {
    SurfaceModel s;
    s.name = name;
    s.lattice = std::make_shared<IntersectionLattice>(labels_, gram_);
    s.K = vec(K);
    s.chiO = chi;
    for (const auto& [l, tag] : curve_labels_) s.curves.push_back({l, vec({{l, 1}}), tag});
    for (const auto& e : extra_) s.curves.push_back({e.name, vec(e.combo), e.tag});
    return s;
  }

  SurfaceModel finish(const std::string& name, const std::map<std::string, Int>& K, Int chi) const {
    SurfaceModel s = pre_model(name, K, chi);
    for (const auto& [label, mu] : blowups_) s = blowup(s, mu, label);
    s.name = name;
    s.divisors = groups_;
    s.germs = germs_;
    return s;
  }

  std::optional<std::size_t> index(const std::string& l) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) return i;
    return std::nullopt;
  }

 private:
  struct Extra {
    std::string name;
    std::map<std::string, Int> combo;
    CurveTag tag;
  };

  std::size_t idx(const std::string& l) const {
    auto i = index(l);
    if (!i) throw std::logic_error("assembler: unknown label " + l);
    return *i;
  }

  std::vector<Int> vec(const std::map<std::string, Int>& combo) const {
    std::vector<Int> v(labels_.size(), 0);
    for (const auto& [l, c] : combo) v[idx(l)] += c;
    return v;
  }

  std::vector<std::string> labels_;
  Matrix gram_;
  std::vector<std::pair<std::string, CurveTag>> curve_labels_;
  std::vector<Extra> extra_;
  std::vector<std::pair<std::string, std::map<std::string, Int>>> blowups_;
  std::vector<std::vector<std::string>> groups_;
  std::vector<SingularityGerm> germs_;
};

std::map<std::string, Int> at_slots(const std::vector<std::string>& names, const std::vector<std::size_t>& sl) {
  std::map<std::string, Int> mu;
  for (auto i : sl) mu[names[i]] += 1;
  return mu;
}

std::map<std::string, Int> merged(std::map<std::string, Int> a, const std::map<std::string, Int>& b) {
  for (const auto& [k, v] : b) a[k] += v;
  return a;
}

std::vector<SingularityGerm> germs_or_default(Stratum s, const StratumOptions& opt) {
  const auto& info = stratum_info(s);
  if (opt.germs.empty()) {
    std::vector<SingularityGerm> out;
    for (Int m : info.mults) out.push_back(SingularityGerm::simple_elliptic(m));
    return out;
  }
  if (opt.germs.size() != info.mults.size())
    throw BuilderError(info.name + " needs " + std::to_string(info.mults.size()) + " germs");
  std::vector<Int> got;
  for (const auto& g : opt.germs) got.push_back(multiplicity(g));
  if (s == Stratum::N211 || s == Stratum::N111) {
    if (std::count(got.begin(), got.end(), 2) >= 2)
      throw BuilderError("three marked points allow at most one of multiplicity 2");
  }
  if (got != info.mults) {
    std::string want;
    for (Int m : info.mults) want += (want.empty() ? "" : ",") + std::to_string(m);
    throw BuilderError(info.name + " needs multiplicities (" + want + ") in that order");
  }
  return opt.germs;
}

SurfaceModel build_empty() {
  SurfaceModel s;
  s.name = "N_empty";
  s.lattice = std::make_shared<IntersectionLattice>(std::vector<std::string>{"H"}, Matrix{{1}});
  s.K = {1};
  s.chiO = 3;
  return s;
}

SurfaceModel build_n1(const std::vector<SingularityGerm>& g) {
  Assembler a;
  a.basis("F", 0, CurveTag::Other);
  const auto d = a.group("D1", g[0], CurveTag::Bisection, CurveTag::FiberComponent);
  a.pairing("F", d[slots(shape_of(g[0]))[0]], 1);
  auto s = a.finish("N_1", {{"F", 1}}, 2);
  s.annotations.push_back("K = F, the reduced double fiber");
  return s;
}

SurfaceModel build_n2(const std::vector<SingularityGerm>& g) {
  Assembler a;
  const auto d = a.group("D1", g[0], CurveTag::Other, CurveTag::Other);
  a.plan_blowup("C", at_slots(d, slots(shape_of(g[0]))));
  auto s = a.finish("N_2", {}, 2);
  s.annotations.push_back("minimal model is a K3 surface; K = C");
  return s;
}

SurfaceModel build_n11e(const std::vector<SingularityGerm>& g) {
  Assembler a;
  const auto d1 = a.group("D1", g[0], CurveTag::Other, CurveTag::Other);
  const auto d2 = a.group("D2", g[1], CurveTag::Other, CurveTag::Other);
  a.plan_blowup("C", merged(at_slots(d1, slots(shape_of(g[0]))), at_slots(d2, slots(shape_of(g[1])))));
  auto s = a.finish("N_1,1^E", {}, 1);
  s.annotations.push_back("minimal model is an Enriques surface; K = C numerically, 2K = 2C linearly");
  return s;
}

SurfaceModel build_n22(const std::vector<SingularityGerm>& g) {
  Assembler a;
  const auto d1 = a.group("D1", g[0], CurveTag::Other, CurveTag::Other);
  const auto d2 = a.group("D2", g[1], CurveTag::Other, CurveTag::Other);
  a.plan_blowup("C1", at_slots(d1, slots(shape_of(g[0]))));
  std::map<std::string, Int> K;
  for (const auto& n : d2) K[n] = -1;
  auto s = a.finish("N_2,2", K, 1);
  // The second (-1)-curve is K + D1, which equals C2 only numerically.
  s.curves.push_back({"C2", (s.canonical() + s.group_sum(0)).coeffs(), CurveTag::Exceptional});
  s.annotations.push_back("K = C1 - D2 = C2 - D1; L = C1 + D1 = C2 + D2");
  return s;
}

SurfaceModel build_n21_generic(const std::vector<SingularityGerm>& g) {
  Assembler a;
  a.basis("F", 0, CurveTag::Other);
  const auto d1 = a.group("D1", g[0], CurveTag::FiberComponent, CurveTag::FiberComponent);
  const auto d2 = a.group("D2", g[1], CurveTag::Bisection, CurveTag::FiberComponent);
  const auto s1 = slots(shape_of(g[0]));
  const auto s2 = slots(shape_of(g[1]));
  a.pairing("F", d2[s2[0]], 1);
  a.plan_blowup("C1", {{d1[s1[0]], 1}, {d2[s2[0]], 1}});
  a.plan_blowup("C2", {{d1[s1[1]], 1}, {d2[s2[0]], 1}});
  if (shape_of(g[1]).irreducible) a.extra_curve("E", {{"D2", 1}, {"F", -1}}, CurveTag::Exceptional);
  auto s = a.finish("N_2,1", {{"F", -1}}, 1);
  s.annotations.push_back("G = D1 + C1 + C2 is numerically 2F");
  return s;
}

// X0 with an irreducible fiber G and bisection Gamma meeting at one point twice.
SurfaceModel n21_base() {
  SurfaceModel s = rational_elliptic_with_half_fiber();
  s.lattice = std::make_shared<IntersectionLattice>(std::vector<std::string>{"F", "G", "Gamma"},
                                                    Matrix{{0, 0, 1}, {0, 0, 2}, {1, 2, 1}});
  s.K = {-1, 0, 0};
  s.curves = {{"F", {1, 0, 0}, CurveTag::Other},
              {"G", {0, 1, 0}, CurveTag::FiberComponent},
              {"Gamma", {0, 0, 1}, CurveTag::Bisection}};
  return s;
}

void retag(SurfaceModel& s, const std::string& name, CurveTag t) {
  for (auto& c : s.curves)
    if (c.name == name) c.tag = t;
}

SurfaceModel build_n21_infinitely_near(const std::vector<SingularityGerm>& g, Realization r) {
  auto s = n21_base();
  if (r == Realization::NodeOfFiber) {
    if (!(g[0] == normalize_cusp({4, 2})) || !shape_of(g[1]).irreducible)
      throw BuilderError("node-of-fiber realization gives a (4,2) cusp and an irreducible D2");
    s = blowup(s, {{"G", 2}, {"Gamma", 1}}, "C");
    s = blowup(s, {{"C", 1}, {"Gamma", 1}}, "Cp");
    retag(s, "C", CurveTag::FiberComponent);
    s.divisors = {{"C", "G"}, {"Gamma"}};
  } else {
    if (!shape_of(g[0]).irreducible || !(g[1] == normalize_cusp({3, 2})))
      throw BuilderError("node-of-bisection realization gives an irreducible D1 and a (3,2) cusp");
    s = blowup(s, {{"Gamma", 2}, {"G", 1}}, "C");
    s = blowup(s, {{"C", 1}, {"G", 1}}, "Cp");
    retag(s, "C", CurveTag::FiberComponent);
    s.divisors = {{"G"}, {"C", "Gamma"}};
  }
  s.name = "N_2,1";
  s.germs = g;
  s.annotations.push_back("infinitely near blowups at a node (" + to_string(r) + ")");
  return s;
}

SurfaceModel build_n11r(const std::vector<SingularityGerm>& g) {
  if (!shape_of(g[1]).irreducible) throw BuilderError("N_1,1^R builder needs D2 irreducible");
  Assembler a;
  a.basis("F", 0, CurveTag::Other);
  a.basis("E", -1, CurveTag::Exceptional);
  a.pairing("F", "E", 1);
  const auto d1 = a.group("D1", g[0], CurveTag::FiberComponent, CurveTag::FiberComponent);
  const auto sl = slots(shape_of(g[0]))[0];
  a.pairing("E", d1[sl], 2);
  a.extra_curve("D2", {{"E", 1}, {"F", 2}}, CurveTag::Other);
  a.plan_blowup("C", {{d1[sl], 1}, {"D2", 2}});
  auto s = a.finish("N_1,1^R", {{"F", -1}}, 1);
  s.divisors.push_back({"D2"});
  s.germs.push_back(g[1]);
  s.annotations.push_back("D2 is the proper transform of a genus-2 curve E + 2F nodal at the blown-up point");
  return s;
}

SurfaceModel build_n211(const std::vector<SingularityGerm>& g) {
  for (const auto& x : g)
    if (x.kind != GermKind::SimpleElliptic) throw BuilderError("N_2,1,1 admits simple elliptic germs only");
  auto s = ruled_surface_x1();
  s.curves.push_back({"D1", {2, -1}, CurveTag::Bisection});
  s.curves.push_back({"D2", {1, 0}, CurveTag::Section});
  s.curves.push_back({"D3", {1, 0}, CurveTag::Section});
  s.curves.push_back({"f1", {0, 1}, CurveTag::FiberComponent});
  s = blowup(s, {{"D2", 1}, {"D3", 1}, {"f1", 1}}, "C1");
  s = blowup(s, {{"D1", 1}, {"D3", 1}}, "C2");
  s = blowup(s, {{"D1", 1}, {"D2", 1}}, "C3");
  s.name = "N_2,1,1";
  s.divisors = {{"D1"}, {"D2"}, {"D3"}};
  s.germs = g;
  return s;
}

SurfaceModel build_n111(const std::vector<SingularityGerm>& g) {
  for (const auto& x : g)
    if (x.kind != GermKind::SimpleElliptic) throw BuilderError("N_1,1,1 admits simple elliptic germs only");
  auto s = ruled_surface_x1();
  s.curves.push_back({"D1", {2, -1}, CurveTag::Bisection});
  s.curves.push_back({"D2", {2, -1}, CurveTag::Bisection});
  s.curves.push_back({"D3", {1, 0}, CurveTag::Section});
  s = blowup(s, {{"D1", 1}, {"D3", 1}}, "C1");
  s = blowup(s, {{"D2", 1}, {"D3", 1}}, "C2");
  s.name = "N_1,1,1";
  s.divisors = {{"D1"}, {"D2"}, {"D3"}};
  s.germs = g;
  return s;
}

}  // namespace

SurfaceModel build_stratum(Stratum st, const StratumOptions& opt) {
  if (opt.realization != Realization::Generic && st != Stratum::N21)
    throw BuilderError("infinitely near realizations exist only for N_2,1");
  if (st == Stratum::Empty) {
    if (!opt.germs.empty()) throw BuilderError("N_empty has no marked points");
    return build_empty();
  }
  const auto g = germs_or_default(st, opt);
  switch (st) {
    case Stratum::N1: return build_n1(g);
    case Stratum::N2: return build_n2(g);
    case Stratum::N11E: return build_n11e(g);
    case Stratum::N22: return build_n22(g);
    case Stratum::N21:
      return opt.realization == Realization::Generic ? build_n21_generic(g)
                                                     : build_n21_infinitely_near(g, opt.realization);
    case Stratum::N11R: return build_n11r(g);
    case Stratum::N211: return build_n211(g);
    case Stratum::N111: return build_n111(g);
    case Stratum::Empty: break;
  }
  return build_empty();
}

std::vector<BuilderVariant> builder_variants() {
  auto c = [](std::vector<Int> es) { return normalize_cusp(es); };
  auto se = [](Int m) { return SingularityGerm::simple_elliptic(m); };
  return {
      {"empty", Stratum::Empty, {}},
      {"n1-se", Stratum::N1, {{se(1)}}},
      {"n1-nodal", Stratum::N1, {{c({1})}}},
      {"n1-cusp-r2", Stratum::N1, {{c({3, 2})}}},
      {"n1-cusp-r4", Stratum::N1, {{c({3, 2, 2, 2})}}},
      {"n1-cusp-r14", Stratum::N1, {{c({3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2})}}},
      {"n2-se", Stratum::N2, {{se(2)}}},
      {"n2-nodal", Stratum::N2, {{c({2})}}},
      {"n2-cusp-4-2", Stratum::N2, {{c({4, 2})}}},
      {"n2-cusp-4-2-2", Stratum::N2, {{c({4, 2, 2})}}},
      {"n2-cusp-3-3", Stratum::N2, {{c({3, 3})}}},
      {"n2-cusp-3-2-3-2", Stratum::N2, {{c({3, 2, 3, 2})}}},
      {"n11e-se", Stratum::N11E, {{se(1), se(1)}}},
      {"n11e-cusp-se", Stratum::N11E, {{c({3, 2}), se(1)}}},
      {"n11e-cusp-cusp", Stratum::N11E, {{c({3, 2, 2}), c({1})}}},
      {"n22-se", Stratum::N22, {{se(2), se(2)}}},
      {"n22-cusp-se", Stratum::N22, {{c({4, 2}), se(2)}}},
      {"n22-cusp-cusp", Stratum::N22, {{c({3, 2, 3}), c({4, 2, 2})}}},
      {"n22-3-3-nodal", Stratum::N22, {{c({3, 3}), c({2})}}},
      {"n21-se", Stratum::N21, {{se(2), se(1)}}},
      {"n21-nodal", Stratum::N21, {{c({2}), c({1})}}},
      {"n21-cusp-cusp", Stratum::N21, {{c({4, 2, 2}), c({3, 2})}}},
      {"n21-3-3-se", Stratum::N21, {{c({3, 2, 3, 2, 2}), se(1)}}},
      {"n21-node-of-fiber", Stratum::N21, {{c({4, 2}), se(1)}, Realization::NodeOfFiber}},
      {"n21-node-of-bisection", Stratum::N21, {{se(2), c({3, 2})}, Realization::NodeOfBisection}},
      {"n11r-se", Stratum::N11R, {{se(1), se(1)}}},
      {"n11r-nodal", Stratum::N11R, {{c({1}), c({1})}}},
      {"n11r-cusp-se", Stratum::N11R, {{c({3, 2, 2}), se(1)}}},
      {"n211", Stratum::N211, {}},
      {"n111", Stratum::N111, {}},
  };
}

namespace {

// Self-intersection sequence of a cycle group in cycle order, or nullopt if not a cycle.
std::optional<std::vector<Int>> cycle_sequence(const SurfaceModel& s, std::size_t i) {
  const auto lat = group_lattice(s, i);
  const std::size_t r = lat.rank();
  std::vector<Int> es;
  if (r == 1) return std::vector<Int>{-lat.at(0, 0)};
  if (r == 2) {
    if (lat.at(0, 1) != 2) return std::nullopt;
    return std::vector<Int>{-lat.at(0, 0), -lat.at(1, 1)};
  }
  std::vector<std::vector<std::size_t>> nb(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      if (a == b || lat.at(a, b) == 0) continue;
      if (lat.at(a, b) != 1) return std::nullopt;
      nb[a].push_back(b);
    }
  for (const auto& n : nb)
    if (n.size() != 2) return std::nullopt;
  std::size_t prev = 0, cur = 0;
  for (std::size_t step = 0; step < r; ++step) {
    es.push_back(-lat.at(cur, cur));
    const std::size_t next = nb[cur][0] == prev && step > 0 ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = next;
  }
  if (cur != 0) return std::nullopt;
  return es;
}

bool group_connected(const SurfaceModel& s, std::size_t i) {
  const auto lat = group_lattice(s, i);
  std::vector<bool> seen(lat.rank(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < lat.rank(); ++b)
      if (!seen[b] && lat.at(a, b) != 0) {
        seen[b] = true;
        stack.push_back(b);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
}

}  // namespace

Report verify_I_surface(const SurfaceModel& s) {
  Report rep(s.name.empty() ? "surface" : s.name);
  if (auto issues = model_issues(s); !issues.empty()) {
    for (const auto& is : issues) rep.require("structure", "Def 2.6", false, is);
    return rep;
  }
  const std::size_t k = s.k();
  const auto K = s.canonical();
  const auto L = s.L();
  std::vector<Int> m(k);
  Int m_total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    m[i] = multiplicity(s.germs[i]);
    m_total += m[i];
  }
  auto D = [](std::size_t i) { return "D" + std::to_string(i + 1); };
  auto M = [](std::size_t i) { return "M" + std::to_string(i + 1); };

  rep.expect("L^2", "Def 2.6", Int{1}, pair(L, L));
  rep.expect("K^2", "Def 2.6", 1 - m_total, pair(K, K));
  rep.expect("chi(O)", "Lemma 2.3", 3 - static_cast<Int>(k), s.chiO);
  rep.require("k<=p_g+1", "Thm 2.4", static_cast<Int>(k) <= 3, "k = " + std::to_string(k));

  std::set<std::string> marked;
  for (std::size_t i = 0; i < k; ++i) {
    const auto Di = s.group_sum(i);
    rep.require(D(i) + " connected", "Def 2.6", group_connected(s, i));
    for (std::size_t j = i + 1; j < k; ++j) {
      bool disjoint = true;
      for (const auto& a : s.divisors[i])
        for (const auto& b : s.divisors[j]) disjoint &= pair(s.curve(a), s.curve(b)) == 0;
      rep.require(D(i) + "," + D(j) + " disjoint", "Def 2.6", disjoint);
    }
    rep.expect("K." + D(i), "Def 2.6", m[i], pair(K, Di));
    rep.expect("-" + D(i) + "^2", "Def 2.6", m[i], -pair(Di, Di));
    rep.expect("K." + D(i) + "+" + D(i) + "^2", "Def 2.6", Int{0}, pair(K, Di) + pair(Di, Di));
    rep.expect("L." + D(i), "Def 2.6", Int{0}, pair(L, Di));
    rep.expect(D(i) + " negative definite", "Remark 2.11", true, is_negative_definite(group_lattice(s, i)));
    const bool irreducible = s.divisors[i].size() == 1;
    for (const auto& c : s.divisors[i]) {
      marked.insert(c);
      const auto C = s.curve(c);
      rep.expect("L." + c, "Assumption 2.7", Int{0}, pair(L, C));
      try {
        rep.expect("p_a(" + c + ")", "Def 1.1", Int{irreducible ? 1 : 0}, adjunction_genus(C, s));
      } catch (const DivisorError& e) {
        rep.require("p_a(" + c + ")", "Def 1.1", false, e.what());
      }
    }
    const auto seq = cycle_sequence(s, i);
    std::string computed = "not a cycle";
    if (seq) {
      try {
        computed = to_string(irreducible && s.germs[i].kind == GermKind::SimpleElliptic
                                 ? SingularityGerm::simple_elliptic((*seq)[0])
                                 : normalize_cusp(*seq));
      } catch (const GermError& e) {
        computed = e.what();
      }
    }
    rep.expect(D(i) + " type", "Def 1.1", to_string(s.germs[i]), computed);
  }
  for (const auto& c : s.curves) {
    if (marked.count(c.name)) continue;
    const Int v = pair(L, s.cls(c.coeffs));
    rep.require("L." + c.name + ">0", "Assumption 2.7", v > 0, std::to_string(v));
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto Mi = s.M(i);
    const auto Di = s.group_sum(i);
    const auto Dpi = s.complement_sum(i);
    rep.expect(M(i) + "^2", "Lemma 2.10", 1 - m[i], pair(Mi, Mi));
    rep.expect(M(i) + ".D'" + std::to_string(i + 1), "Lemma 2.10", Int{0}, pair(Mi, Dpi));
    rep.expect(M(i) + "." + D(i), "Lemma 2.10", m[i], pair(Mi, Di));
    rep.expect(M(i) + ".K", "Lemma 2.10", 1 - m[i], pair(Mi, K));
    rep.expect("L." + M(i), "Lemma 2.10", Int{1}, pair(L, Mi));
    rep.expect(M(i) + " = L-" + D(i), "Lemma 2.10", true, Mi == L - Di);
    for (std::size_t j = i + 1; j < k; ++j)
      rep.expect(M(i) + "." + M(j), "Lemma 2.10", Int{1}, pair(Mi, s.M(j)));
  }
  rep.note("positivity and nef statements are checked against the declared curve list only");
  return rep;
}

CanonicalBundleCoeffs canonical_bundle_coeffs(const FibrationData& fd) {
  CanonicalBundleCoeffs out{2 * fd.g - 2 + fd.chi, {}, Rational(fd.chi - 2)};
  for (Int m : fd.mults) {
    if (m < 2) throw BuilderError("multiple fiber multiplicities must be at least 2");
    out.multiple_fiber_coefficients.push_back(m - 1);
    out.kodaira_indicator += Rational(m - 1, m);
  }
  return out;
}

LengthCounts c2_length_counts(Int p_g, std::optional<Int> r) {
  if (p_g < 0) throw BuilderError("p_g must be nonnegative");
  if (r && *r < 1) throw BuilderError("cusp length must be positive");
  LengthCounts out{12 * (1 + p_g), std::nullopt};
  if (r) out.lW = out.lZ - *r + 1;
  return out;
}

DoubleCoverModel build_double_cover(Int N, Int k) {
  if (N < 1) throw BuilderError("N must be at least 1");
  if (k < 2 * N) throw BuilderError("double cover needs k >= 2N");
  DoubleCoverModel dc;
  dc.N = N;
  dc.k = k;
  auto& s = dc.base;
  s.name = "F~_" + std::to_string(N);
  // sigma0, f, e, d2
  s.lattice = std::make_shared<IntersectionLattice>(
      std::vector<std::string>{"sigma0", "f", "e", "d2"},
      Matrix{{-N, 1, 0, 1}, {1, 0, 0, 0}, {0, 0, -1, 1}, {1, 0, 1, -2}});
  s.chiO = 1;
  const auto sigma0 = DivisorClass::basis(s.lattice, "sigma0");
  const auto f = DivisorClass::basis(s.lattice, "f");
  const auto e = DivisorClass::basis(s.lattice, "e");
  const auto d2 = DivisorClass::basis(s.lattice, "d2");
  const auto d1 = f - 2 * e - d2;
  const auto K = (-2) * sigma0 - (N + 2) * f + d1 + 2 * e;
  const auto B = 4 * sigma0 + (2 * k) * f - 2 * e + 2 * d2;
  const auto B0 = B - d1 - d2;
  const auto half = 2 * sigma0 + k * f - e + d2;
  if (!(2 * half == B)) throw std::logic_error("B is not divisible by 2");
  s.K = K.coeffs();
  s.curves = {{"sigma0", sigma0.coeffs(), CurveTag::Section},
              {"f", f.coeffs(), CurveTag::FiberComponent},
              {"e", e.coeffs(), CurveTag::Exceptional},
              {"d1", d1.coeffs(), CurveTag::FiberComponent},
              {"d2", d2.coeffs(), CurveTag::FiberComponent}};
  dc.d1 = d1.coeffs();
  dc.K = K.coeffs();
  dc.B = B.coeffs();
  dc.B0 = B0.coeffs();
  dc.half_B = half.coeffs();
  // K + B/2 = p_g f - e
  dc.p_g = (K + half).coeffs()[1];
  dc.sigma_tilde_sq = cover_pairing("Sigma~", "Sigma~", dc);
  const Int meet_e1 = cover_pairing("Sigma~", "e1", dc);
  const Int meet_e2 = cover_pairing("Sigma~", "e2", dc);
  // Contracting e1, e2 raises Sigma~^2 by the squares of its intersections with them.
  dc.sigma_sq = dc.sigma_tilde_sq + meet_e1 * meet_e1 + meet_e2 * meet_e2;
  // Canonical class of the cover is nu^*(K + B/2).
  const Rational KZ_sigma = Rational(2 * pair(K + half, sigma0));
  const Rational two_pa = Rational(dc.sigma_tilde_sq) + KZ_sigma;
  dc.pa_sigma = static_cast<Int>(1 + two_pa.convert_to<long long>() / 2);
  return dc;
}

namespace {

struct RationalClass {
  std::vector<Rational> v;
};

RationalClass parse_cover(const std::string& expr, const DoubleCoverModel& dc) {
  const auto& lat = *dc.base.lattice;
  RationalClass out{std::vector<Rational>(lat.rank(), 0)};
  auto add_base = [&](const std::vector<Int>& c, const Rational& w) {
    for (std::size_t i = 0; i < c.size(); ++i) out.v[i] += w * c[i];
  };
  std::size_t p = 0;
  auto skip = [&] {
    while (p < expr.size() && std::isspace(static_cast<unsigned char>(expr[p]))) ++p;
  };
  bool first = true;
  while (true) {
    skip();
    if (p == expr.size()) break;
    Int sign = 1;
    if (expr[p] == '+' || expr[p] == '-') {
      sign = expr[p] == '-' ? -1 : 1;
      ++p;
      skip();
    } else if (!first) {
      throw BuilderError("cover expression '" + expr + "': expected + or -");
    }
    first = false;
    Int coef = 1;
    if (p < expr.size() && std::isdigit(static_cast<unsigned char>(expr[p]))) {
      coef = 0;
      while (p < expr.size() && std::isdigit(static_cast<unsigned char>(expr[p]))) coef = coef * 10 + (expr[p++] - '0');
      skip();
      if (p < expr.size() && expr[p] == '*') ++p;
      skip();
    }
    std::string name;
    while (p < expr.size() && !std::isspace(static_cast<unsigned char>(expr[p])) && expr[p] != '+' && expr[p] != '-')
      name += expr[p++];
    const Rational w(sign * coef);
    auto base_class = [&](const std::string& label) -> std::vector<Int> {
      for (const auto& c : dc.base.curves)
        if (c.name == label) return c.coeffs;
      throw BuilderError("cover expression '" + expr + "': unknown base class '" + label + "'");
    };
    if (name == "Sigma~") {
      add_base(base_class("sigma0"), w);
    } else if (name == "F'") {
      add_base(base_class("e"), w);
    } else if (name == "e1") {
      add_base(base_class("d1"), w / 2);
    } else if (name == "e2") {
      add_base(base_class("d2"), w / 2);
    } else if (name.rfind("nu*", 0) == 0) {
      add_base(base_class(name.substr(3)), w);
    } else {
      throw BuilderError("cover expression '" + expr + "': unknown primitive '" + name + "'");
    }
  }
  if (first) throw BuilderError("empty cover expression");
  return out;
}

}  // namespace

Int cover_pairing(const std::string& a, const std::string& b, const DoubleCoverModel& dc) {
  const auto x = parse_cover(a, dc), y = parse_cover(b, dc);
  const auto& g = dc.base.lattice->gram();
  Rational acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) acc += x.v[i] * g[i][j] * y.v[j];
  acc *= 2;
  if (boost::multiprecision::denominator(acc) != 1)
    throw BuilderError("cover pairing of '" + a + "' and '" + b + "' is not integral");
  return boost::multiprecision::numerator(acc).convert_to<Int>();
}

Report vanishing_bound_checks(std::optional<Int> cusp_length) {
  Report rep("vanishing bounds");
  const Int r = cusp_length.value_or(14);

  {
    const auto dc = build_double_cover(1, 3);
    const auto B0 = dc.cls(dc.B0);
    const auto test = dc.base.parse("sigma0 + 3f - e");
    const Int v = pair(B0, test);
    const Int lZ = c2_length_counts(dc.p_g).lZ;
    rep.expect("thm4.3 pairing", "Thm 4.3", Int{13}, v);
    rep.expect("thm4.3 bound", "Thm 4.3", true, v < lZ);
  }
  {
    // On the doubly blown-up F_2 only the pairings of B0 with sigma0, f, e are known.
    const std::vector<Int> b0_against = {1, 4, 2};  // B0.sigma0, B0.f, B0.e
    const std::vector<Int> stated = {1, 3, -2};
    Int v = 0;
    for (std::size_t i = 0; i < 3; ++i) v += b0_against[i] * stated[i];
    const Int threshold = *c2_length_counts(1, r).lW - 1;
    rep.expect("thm4.5 pairing", "Thm 4.5", Int{9}, v);
    rep.expect("thm4.5 bound r=" + std::to_string(r), "Thm 4.5", r <= 14, v < threshold);
    rep.note("thm4.5: the class sigma0 + 3f - e pairs to " +
             std::to_string(b0_against[0] + 3 * b0_against[1] - b0_against[2]) +
             " with B0; the bound uses the stated combination with coefficient -2 on B0.e");
  }
  {
    const auto dc = build_double_cover(1, 2);
    const auto B0 = dc.cls(dc.B0);
    const Int lZ = c2_length_counts(dc.p_g).lZ;
    const Int v7 = pair(dc.base.parse("sigma0 + 2f - e"), B0);
    const Int v11 = pair(dc.base.parse("sigma0 + 3f - e"), B0);
    rep.expect("prop6.9 pairing", "Prop 6.9", Int{7}, v7);
    rep.expect("prop6.9 bound", "Prop 6.9", true, v7 < lZ);
    rep.expect("prop6.17 pairing", "Prop 6.17", Int{11}, v11);
    rep.expect("prop6.17 bound", "Prop 6.17", true, v11 < lZ);
  }
  return rep;
}

}  // namespace isurf
