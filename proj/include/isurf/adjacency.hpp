#pragma once

#include "isurf/germ.hpp"

#include <set>
#include <string>
#include <vector>

namespace isurf {

// A target of an adjacency; several germs when the nearby fiber is disconnected.
using GermMultiset = std::vector<SingularityGerm>;

struct AdjacencyRule {
  SingularityGerm source;
  std::vector<GermMultiset> targets;
  std::string provenance;
};

// Generators for one germ (sorted, duplicate-free). Throws GermError for
// RDP, smooth and triangle germs.
AdjacencyRule adjacency_rule(const SingularityGerm& g);
std::vector<GermMultiset> direct_adjacencies(const SingularityGerm& g);

// Every germ reachable under the reflexive-transitive closure.
std::set<SingularityGerm> adjacency_closure(const SingularityGerm& g);
bool is_adjacent(const SingularityGerm& from, const SingularityGerm& to);

enum class Stratum { Empty, N1, N2, N11E, N22, N21, N11R, N211, N111 };
enum class BirationalClass { GeneralType, EllipticKodairaOne, BlownUpK3, BlownUpEnriques, Rational, EllipticRuled };

struct StratumLabel {
  Stratum id;
  std::string name;          // ascii, e.g. "N_2,1"
  std::vector<Int> mults;    // non-increasing
  BirationalClass birational;
};

const std::vector<StratumLabel>& all_strata();
const StratumLabel& stratum_info(Stratum s);
std::string to_string(BirationalClass b);
Stratum parse_stratum(const std::string& name);

enum class EdgeSource { Rule, Paper, Exotic };
std::string to_string(EdgeSource s);

// from -> to means the closure of `from` meets `to`.
struct StrataEdge {
  Stratum from;
  Stratum to;
  EdgeSource source;
  bool rule_derived = false;
  bool asserted = false;
  bool via_multiplicity_drop = false;
  std::string citation;
};

struct StrataGraph {
  std::vector<StratumLabel> nodes;
  std::vector<StrataEdge> edges;

  bool has_edge(Stratum from, Stratum to) const;
  // Asserted edges that no rule derives.
  std::vector<StrataEdge> unexplained() const;
  std::string to_dot() const;
};

// Germ types admitted at each marked point of a stratum, up to the given cycle length.
std::vector<std::vector<SingularityGerm>> admitted_germs(Stratum s, Int max_length);

StrataGraph build_strata_graph();

}  // namespace isurf
