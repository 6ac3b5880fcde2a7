#include "isurf/adjacency.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace isurf {

namespace {

SingularityGerm se(Int m) { return SingularityGerm::simple_elliptic(m); }

// (head, 2^{len-1})
SingularityGerm head_chain(Int head, std::size_t len) {
  std::vector<Int> es(len, 2);
  es[0] = head;
  return normalize_cusp(es);
}

// (3, 2^a, 3, 2^b)
SingularityGerm two_threes(std::size_t a, std::size_t b) {
  std::vector<Int> es(a + b + 2, 2);
  es[0] = 3;
  es[a + 1] = 3;
  return normalize_cusp(es);
}

// Gaps of 2's between the two 3's of a multiplicity-2 cycle.
std::pair<std::size_t, std::size_t> gaps(const std::vector<Int>& es) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i] == 3) pos.push_back(i);
  const std::size_t a = pos[1] - pos[0] - 1;
  return {a, es.size() - 2 - a};
}

void add(std::vector<GermMultiset>& t, const SingularityGerm& g) { t.push_back({g}); }

}  // namespace

AdjacencyRule adjacency_rule(const SingularityGerm& g) {
  AdjacencyRule rule{g, {}, ""};
  auto& t = rule.targets;
  if (g.kind == GermKind::SimpleElliptic) {
    if (g.m > 2) throw GermError("no adjacency rules for " + to_string(g));
    add(t, se(g.m));
    rule.provenance = "Thm 1.6(i)";
  } else if (g.kind == GermKind::Cusp) {
    const Int m = multiplicity(g);
    const std::size_t r = g.es.size();
    if (m > 2) throw GermError("no adjacency rules for " + to_string(g));
    if (m == 1) {
      for (std::size_t s = 2; s <= r; ++s) add(t, head_chain(3, s));
      add(t, se(1));
      add(t, normalize_cusp({1}));
      rule.provenance = "Thm 1.6(ii)";
    } else if (r == 1) {
      add(t, g);
      rule.provenance = "smoothable germ";
    } else if (std::count(g.es.begin(), g.es.end(), 4) == 1) {
      for (std::size_t s = 2; s <= r; ++s) add(t, head_chain(4, s));
      if (r >= 4) add(t, head_chain(3, r - 2));
      if (r == 3) {
        add(t, se(1));
        add(t, normalize_cusp({1}));
      }
      if (r == 2) add(t, se(1));
      rule.provenance = "Thm 1.6(iii)";
    } else {
      const auto [a, b] = gaps(g.es);
      if (a > 0) add(t, two_threes(a - 1, b));
      if (b > 0) add(t, two_threes(a, b - 1));
      if (a == 0 && b > 0) add(t, head_chain(4, b + 1));
      if (b == 0 && a > 0) add(t, head_chain(4, a + 1));
      if (a == 0 && b == 0) {
        add(t, normalize_cusp({2}));
        add(t, se(2));
      }
      rule.provenance = "Thm 1.6(iv)";
    }
  } else {
    throw GermError("no adjacency rules for " + to_string(g));
  }
  // Every germ here is smoothable; RDP covers any configuration of rational double points.
  if (!(g.kind == GermKind::Cusp && multiplicity(g) == 2 && g.es.size() >= 2)) {
    add(t, SingularityGerm::rdp());
    add(t, SingularityGerm::smooth());
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return rule;
}

std::vector<GermMultiset> direct_adjacencies(const SingularityGerm& g) { return adjacency_rule(g).targets; }

std::set<SingularityGerm> adjacency_closure(const SingularityGerm& g) {
  std::set<SingularityGerm> seen{g};
  std::vector<SingularityGerm> stack{g};
  while (!stack.empty()) {
    const auto cur = stack.back();
    stack.pop_back();
    if (cur.is_terminal()) continue;
    for (const auto& target : direct_adjacencies(cur))
      for (const auto& h : target)
        if (seen.insert(h).second) stack.push_back(h);
  }
  return seen;
}

bool is_adjacent(const SingularityGerm& from, const SingularityGerm& to) {
  if (from == to) return true;
  if (from.kind == GermKind::Triangle || to.kind == GermKind::Triangle)
    throw GermError("triangle germs are not supported");
  if (from.is_terminal()) return false;
  return adjacency_closure(from).count(to) > 0;
}

const std::vector<StratumLabel>& all_strata() {
  static const std::vector<StratumLabel> strata = {
      {Stratum::Empty, "N_empty", {}, BirationalClass::GeneralType},
      {Stratum::N1, "N_1", {1}, BirationalClass::EllipticKodairaOne},
      {Stratum::N2, "N_2", {2}, BirationalClass::BlownUpK3},
      {Stratum::N11E, "N_1,1^E", {1, 1}, BirationalClass::BlownUpEnriques},
      {Stratum::N22, "N_2,2", {2, 2}, BirationalClass::Rational},
      {Stratum::N21, "N_2,1", {2, 1}, BirationalClass::Rational},
      {Stratum::N11R, "N_1,1^R", {1, 1}, BirationalClass::Rational},
      {Stratum::N211, "N_2,1,1", {2, 1, 1}, BirationalClass::EllipticRuled},
      {Stratum::N111, "N_1,1,1", {1, 1, 1}, BirationalClass::EllipticRuled},
  };
  return strata;
}

const StratumLabel& stratum_info(Stratum s) {
  for (const auto& l : all_strata())
    if (l.id == s) return l;
  throw std::logic_error("unknown stratum");
}

Stratum parse_stratum(const std::string& name) {
  for (const auto& l : all_strata())
    if (l.name == name) return l.id;
  throw std::invalid_argument("unknown stratum '" + name + "'");
}

std::string to_string(BirationalClass b) {
  switch (b) {
    case BirationalClass::GeneralType: return "general type";
    case BirationalClass::EllipticKodairaOne: return "properly elliptic";
    case BirationalClass::BlownUpK3: return "blown-up K3";
    case BirationalClass::BlownUpEnriques: return "blown-up Enriques";
    case BirationalClass::Rational: return "rational";
    case BirationalClass::EllipticRuled: return "blown-up elliptic ruled";
  }
  return "?";
}

std::string to_string(EdgeSource s) {
  switch (s) {
    case EdgeSource::Rule: return "rule";
    case EdgeSource::Paper: return "paper";
    case EdgeSource::Exotic: return "exotic";
  }
  return "?";
}

std::vector<std::vector<SingularityGerm>> admitted_germs(Stratum s, Int max_length) {
  std::vector<SingularityGerm> any1, any2;
  for (const auto& g : enumerate_types(2, max_length)) (multiplicity(g) == 1 ? any1 : any2).push_back(g);
  const std::vector<SingularityGerm> se1{se(1)}, se2{se(2)};
  switch (s) {
    case Stratum::Empty: return {};
    case Stratum::N1: return {any1};
    case Stratum::N2: return {any2};
    case Stratum::N11E:
    case Stratum::N11R: return {any1, any1};
    case Stratum::N22: return {any2, any2};
    case Stratum::N21: return {any2, any1};
    case Stratum::N211: return {se2, se1, se1};
    case Stratum::N111: return {se1, se1, se1};
  }
  return {};
}

bool StrataGraph::has_edge(Stratum from, Stratum to) const {
  for (const auto& e : edges)
    if (e.from == from && e.to == to) return true;
  return false;
}

std::vector<StrataEdge> StrataGraph::unexplained() const {
  std::vector<StrataEdge> out;
  for (const auto& e : edges)
    if (e.asserted && !e.rule_derived) out.push_back(e);
  return out;
}

std::string StrataGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph strata {\n  rankdir=LR;\n";
  for (const auto& n : nodes) {
    std::string ms;
    for (std::size_t i = 0; i < n.mults.size(); ++i) ms += (i ? "," : "") + std::to_string(n.mults[i]);
    os << "  \"" << n.name << "\" [label=\"" << n.name << "\\n{" << ms << "}\\n" << to_string(n.birational)
       << "\"];\n";
  }
  for (const auto& e : edges) {
    const char* style = e.source == EdgeSource::Rule ? "dashed" : "solid";
    os << "  \"" << stratum_info(e.from).name << "\" -> \"" << stratum_info(e.to).name << "\" [source=\""
       << to_string(e.source) << "\", candidate=\"" << (e.asserted ? "false" : "true") << "\", style=" << style;
    if (!e.citation.empty()) os << ", citation=\"" << e.citation << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

struct Asserted {
  Stratum from, to;
  const char* citation;
};

const std::vector<Asserted>& asserted_edges() {
  static const std::vector<Asserted> table = {
      {Stratum::N1, Stratum::N2, "Introduction"},
      {Stratum::N21, Stratum::N22, "Introduction; Remark 6.8"},
      {Stratum::N11R, Stratum::N21, "Introduction; Prop 6.16"},
      {Stratum::N11R, Stratum::N111, "Thm 8.3(v)"},
      {Stratum::N11E, Stratum::N111, "Thm 8.3(v)"},
      {Stratum::N11E, Stratum::N211, "Thm 8.3(iv)"},
      {Stratum::N21, Stratum::N211, "Thm 8.3(iv)"},
  };
  return table;
}

}  // namespace

StrataGraph build_strata_graph() {
  constexpr Int kMaxLength = 6;
  StrataGraph graph;
  graph.nodes = all_strata();

  // (from, to) -> {derived by smoothing, derived by a multiplicity drop}
  std::map<std::pair<Stratum, Stratum>, std::pair<bool, bool>> derived;
  for (const auto& target : all_strata()) {
    const auto points = admitted_germs(target.id, kMaxLength);
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (const auto& g : points[i]) {
        for (const auto& h : adjacency_closure(g)) {
          const Int old_m = target.mults[i];
          const Int new_m = h.is_terminal() ? 0 : multiplicity(h);
          if (new_m == old_m) continue;
          auto ms = target.mults;
          ms.erase(ms.begin() + static_cast<std::ptrdiff_t>(i));
          if (new_m > 0) ms.push_back(new_m);
          std::sort(ms.rbegin(), ms.rend());
          for (const auto& src : all_strata()) {
            if (src.mults != ms || src.id == target.id) continue;
            auto& flags = derived[{src.id, target.id}];
            (new_m == 0 ? flags.first : flags.second) = true;
          }
        }
      }
    }
  }

  std::map<std::pair<Stratum, Stratum>, std::string> asserted;
  for (const auto& a : asserted_edges()) asserted[{a.from, a.to}] = a.citation;

  std::set<std::pair<Stratum, Stratum>> keys;
  for (const auto& [k, v] : derived) keys.insert(k);
  for (const auto& [k, v] : asserted) keys.insert(k);
  for (const auto& k : keys) {
    StrataEdge e{k.first, k.second, EdgeSource::Rule, false, false, false, {}};
    auto d = derived.find(k);
    auto a = asserted.find(k);
    e.rule_derived = d != derived.end();
    e.asserted = a != asserted.end();
    e.via_multiplicity_drop = e.rule_derived && !d->second.first;
    if (e.asserted) {
      e.citation = a->second;
      e.source = e.via_multiplicity_drop ? EdgeSource::Exotic : EdgeSource::Paper;
    }
    graph.edges.push_back(e);
  }
  return graph;
}

}  // namespace isurf
