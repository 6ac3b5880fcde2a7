#include "isurf/germ.hpp"

#include "isurf/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace isurf {

SingularityGerm SingularityGerm::simple_elliptic(Int m, std::string j_tag) {
  if (m < 1) throw GermError("simple elliptic multiplicity must be positive");
  SingularityGerm g;
  g.kind = GermKind::SimpleElliptic;
  g.m = m;
  g.j_tag = std::move(j_tag);
  return g;
}

SingularityGerm SingularityGerm::cusp(const std::vector<Int>& es) { return normalize_cusp(es); }

SingularityGerm SingularityGerm::triangle(const std::vector<Int>& pqr) {
  if (pqr.size() != 3) throw GermError("triangle germ needs three entries");
  for (Int x : pqr)
    if (x < 2) throw GermError("triangle entries must be at least 2");
  SingularityGerm g;
  g.kind = GermKind::Triangle;
  g.es = pqr;
  std::sort(g.es.begin(), g.es.end());
  return g;
}

SingularityGerm SingularityGerm::rdp() {
  SingularityGerm g;
  g.kind = GermKind::RDP;
  return g;
}

SingularityGerm SingularityGerm::smooth() { return {}; }

std::strong_ordering SingularityGerm::operator<=>(const SingularityGerm& o) const {
  if (auto c = kind <=> o.kind; c != 0) return c;
  if (auto c = m <=> o.m; c != 0) return c;
  return es <=> o.es;
}

std::vector<Int> dihedral_normal_form(const std::vector<Int>& es) {
  const std::size_t r = es.size();
  std::vector<Int> best = es;
  std::vector<Int> cand(r);
  for (int refl = 0; refl < 2; ++refl) {
    for (std::size_t shift = 0; shift < r; ++shift) {
      for (std::size_t i = 0; i < r; ++i)
        cand[i] = refl ? es[(shift + r - i) % r] : es[(shift + i) % r];
      if (cand < best) best = cand;
    }
  }
  return best;
}

SingularityGerm normalize_cusp(const std::vector<Int>& es) {
  if (es.empty()) throw GermError("cusp needs at least one entry");
  if (es.size() == 1) {
    if (es[0] < 1) throw GermError("length-one cusp needs e >= 1");
  } else {
    bool above_two = false;
    for (Int e : es) {
      if (e < 2) throw GermError("cusp cycle entries must be at least 2");
      above_two |= e >= 3;
    }
    if (!above_two) throw GermError("cusp cycle of (-2)-curves is not a cusp");
  }
  SingularityGerm g;
  g.kind = GermKind::Cusp;
  g.es = dihedral_normal_form(es);
  return g;
}

Int multiplicity(const SingularityGerm& g) {
  switch (g.kind) {
    case GermKind::SimpleElliptic:
      return g.m;
    case GermKind::Cusp: {
      if (g.es.size() == 1) return g.es[0];
      Int m = 0;
      for (Int e : g.es) m += e - 2;
      return m;
    }
    default:
      throw GermError("germ " + to_string(g) + " has no multiplicity");
  }
}

IntersectionLattice resolution_lattice(const SingularityGerm& g) {
  if (g.kind == GermKind::SimpleElliptic) return {{"D"}, {{-g.m}}};
  if (g.kind != GermKind::Cusp) throw GermError("no resolution lattice for " + to_string(g));
  const std::size_t r = g.es.size();
  if (r == 1) return {{"E1"}, {{-g.es[0]}}};
  Matrix gram(r, std::vector<Int>(r, 0));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) {
    labels.push_back("E" + std::to_string(i + 1));
    gram[i][i] = -g.es[i];
    const std::size_t j = (i + 1) % r;
    gram[i][j] += 1;
    gram[j][i] += 1;
  }
  return {labels, gram};
}

std::vector<SingularityGerm> enumerate_types(Int max_mult, Int max_length) {
  if (max_mult < 1 || max_mult > 2) throw GermError("enumeration supports multiplicity 1 or 2 only");
  if (max_length < 1) throw GermError("max length must be positive");
  std::vector<SingularityGerm> out;
  auto twos = [](std::size_t k) { return std::vector<Int>(k, 2); };
  for (Int m = 1; m <= max_mult; ++m) {
    out.push_back(SingularityGerm::simple_elliptic(m));
    out.push_back(normalize_cusp({m}));
  }
  for (auto r = static_cast<std::size_t>(2); r <= static_cast<std::size_t>(max_length); ++r) {
    auto one = twos(r);
    one[0] = 3;
    out.push_back(normalize_cusp(one));
    if (max_mult < 2) continue;
    auto four = twos(r);
    four[0] = 4;
    out.push_back(normalize_cusp(four));
    for (std::size_t a = 0; a + a <= r - 2; ++a) {
      auto two_threes = twos(r);
      two_threes[0] = 3;
      two_threes[a + 1] = 3;
      out.push_back(normalize_cusp(two_threes));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const SingularityGerm& g) {
  auto join = [](const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  switch (g.kind) {
    case GermKind::SimpleElliptic:
      return "se:" + std::to_string(g.m);
    case GermKind::Cusp:
      return "c:" + join(g.es);
    case GermKind::Triangle:
      return "t:" + join(g.es);
    case GermKind::RDP:
      return "rdp";
    case GermKind::Smooth:
      return "smooth";
  }
  return "?";
}

namespace {

std::vector<Int> parse_int_list(const std::string& body, const std::string& whole) {
  std::vector<Int> out;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("trailing");
      out.push_back(v);
    } catch (const std::exception&) {
      throw GermError("bad integer '" + tok + "' in germ '" + whole + "'");
    }
  }
  if (out.empty()) throw GermError("empty list in germ '" + whole + "'");
  return out;
}

}  // namespace

SingularityGerm parse_germ(const std::string& text) {
  std::string t = text;
  t.erase(0, t.find_first_not_of(" \t\n"));
  t.erase(t.find_last_not_of(" \t\n") + 1);
  if (!t.empty() && t.front() == '{') return germ_from_json(nlohmann::json::parse(t));
  if (t == "rdp") return SingularityGerm::rdp();
  if (t == "smooth") return SingularityGerm::smooth();
  const auto colon = t.find(':');
  if (colon == std::string::npos) throw GermError("unrecognized germ '" + text + "'");
  const std::string head = t.substr(0, colon), body = t.substr(colon + 1);
  const auto vals = parse_int_list(body, text);
  if (head == "c") return normalize_cusp(vals);
  if (head == "se") {
    if (vals.size() != 1) throw GermError("se: takes one multiplicity");
    return SingularityGerm::simple_elliptic(vals[0]);
  }
  if (head == "t") return SingularityGerm::triangle(vals);
  throw GermError("unrecognized germ prefix '" + head + "'");
}

}  // namespace isurf
