#include "isurf/adjacency.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <regex>

using namespace isurf;

namespace {

SingularityGerm c(std::vector<Int> es) { return normalize_cusp(es); }
SingularityGerm se(Int m) { return SingularityGerm::simple_elliptic(m); }

bool has_target(const SingularityGerm& g, const GermMultiset& t) {
  const auto all = direct_adjacencies(g);
  return std::find(all.begin(), all.end(), t) != all.end();
}

std::string code_of(const SingularityGerm& g) {
  switch (g.kind) {
    case GermKind::SimpleElliptic: return "se" + std::to_string(g.m);
    case GermKind::RDP: return "rdp";
    case GermKind::Smooth: return "smooth";
    default: return oracle::cusp_code({g.es.begin(), g.es.end()});
  }
}

Int weight(const SingularityGerm& g) { return g.is_terminal() ? 0 : multiplicity(g); }

}  // namespace

TEST_CASE("generator facts") {
  CHECK(has_target(c({4, 2}), {se(1)}));
  CHECK(has_target(c({3, 3}), {c({2})}));
  CHECK(has_target(c({3, 3}), {se(2)}));
  const auto t = direct_adjacencies(se(2));
  CHECK(t.size() == 3);
  CHECK(has_target(se(2), {se(2)}));
  CHECK(has_target(se(2), {SingularityGerm::rdp()}));
  CHECK(has_target(se(2), {SingularityGerm::smooth()}));
  CHECK_FALSE(is_adjacent(se(2), se(1)));
  CHECK_FALSE(is_adjacent(se(1), se(2)));
  CHECK(is_adjacent(c({3, 2, 2}), c({3, 2, 2})));
  CHECK(is_adjacent(c({4, 2, 2, 2, 2}), c({3, 2})));
  for (int r = 4; r <= 10; ++r) {
    std::vector<Int> src = {4}, dst = {3};
    src.insert(src.end(), static_cast<std::size_t>(r - 1), 2);
    dst.insert(dst.end(), static_cast<std::size_t>(r - 3), 2);
    CHECK(has_target(c(src), {c(dst)}));
  }
  CHECK_THROWS_AS(direct_adjacencies(SingularityGerm::rdp()), GermError);
  CHECK(adjacency_rule(c({4, 2})).provenance.size() > 0);
}

TEST_CASE("closure agrees with the BFS oracle up to length 10") {
  const auto universe = oracle::germ_universe(10);
  std::map<std::string, SingularityGerm> by_code;
  for (const auto& g : enumerate_types(2, 10)) by_code[code_of(g)] = g;
  by_code["rdp"] = SingularityGerm::rdp();
  by_code["smooth"] = SingularityGerm::smooth();
  REQUIRE(by_code.size() == universe.size());
  for (const auto& from : universe) {
    if (from == "rdp" || from == "smooth") continue;
    const auto reach = oracle::reachable_by_bfs(from, universe);
    std::set<std::string> got;
    for (const auto& g : adjacency_closure(by_code.at(from))) got.insert(code_of(g));
    CHECK_MESSAGE(got == reach, from);
    for (const auto& to : universe) CHECK(is_adjacent(by_code.at(from), by_code.at(to)) == (reach.count(to) > 0));
  }
}

TEST_CASE("generators never raise multiplicity or cycle length") {
  for (const auto& g : enumerate_types(2, 10)) {
    for (const auto& target : direct_adjacencies(g)) {
      Int w = 0;
      for (const auto& t : target) w += weight(t);
      CHECK(w <= multiplicity(g));
      for (const auto& t : target)
        if (t.kind == GermKind::Cusp && g.kind == GermKind::Cusp) CHECK(t.es.size() <= g.es.size());
    }
  }
}

TEST_CASE("strata graph") {
  const auto g = build_strata_graph();
  CHECK(g.nodes.size() == 9);
  CHECK(g.unexplained().empty());
  const std::vector<std::pair<Stratum, Stratum>> asserted = {
      {Stratum::N1, Stratum::N2},     {Stratum::N21, Stratum::N22},   {Stratum::N11R, Stratum::N21},
      {Stratum::N11R, Stratum::N111}, {Stratum::N11E, Stratum::N111}, {Stratum::N11E, Stratum::N211},
      {Stratum::N21, Stratum::N211}};
  std::size_t n_asserted = 0;
  for (const auto& e : g.edges) {
    CHECK(e.from != e.to);
    if (e.asserted) ++n_asserted;
    if (e.source == EdgeSource::Exotic) CHECK(e.via_multiplicity_drop);
    if (e.source == EdgeSource::Rule) CHECK_FALSE(e.asserted);
  }
  CHECK(n_asserted == asserted.size());
  for (const auto& [a, b] : asserted) CHECK(g.has_edge(a, b));
  for (const auto& e : g.edges)
    if (e.asserted) CHECK((e.rule_derived || e.source == EdgeSource::Exotic));

  const auto dot = g.to_dot();
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
  const std::regex node(R"re(^  "[^"]+" \[label="[^"]*"\];$)re");
  const std::regex edge(R"re(^  "[^"]+" -> "[^"]+" \[.*\];$)re");
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    if (std::regex_match(line, node)) ++nodes;
    if (std::regex_match(line, edge)) ++edges;
  }
  CHECK(nodes == 9);
  CHECK(edges == g.edges.size());
}

TEST_CASE("admitted germs respect stratum multiplicities") {
  for (const auto& st : all_strata()) {
    const auto pts = admitted_germs(st.id, 4);
    REQUIRE(pts.size() == st.mults.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (const auto& g : pts[i]) CHECK(multiplicity(g) == st.mults[i]);
  }
}
