#pragma once

#include "isurf/lattice.hpp"

#include <compare>
#include <string>
#include <vector>

namespace isurf {

class GermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Triangle germs are parsed so that configs can name them, then rejected by every operation.
enum class GermKind { SimpleElliptic, Cusp, Triangle, RDP, Smooth };

// Cusp entries are stored as positive e_i; a cycle entry e_i means E_i^2 = -e_i.
// A length-1 cusp (e) is a nodal curve with D^2 = -e.
struct SingularityGerm {
  GermKind kind = GermKind::Smooth;
  Int m = 0;                // simple elliptic only
  std::vector<Int> es;      // cusp cycle in normal form, or triangle (p,q,r)
  std::string j_tag;        // opaque, ignored by comparisons

  static SingularityGerm simple_elliptic(Int m, std::string j_tag = {});
  static SingularityGerm cusp(const std::vector<Int>& es);  // normalizes
  static SingularityGerm triangle(const std::vector<Int>& pqr);
  static SingularityGerm rdp();
  static SingularityGerm smooth();

  bool is_elliptic() const { return kind == GermKind::SimpleElliptic || kind == GermKind::Cusp; }
  bool is_terminal() const { return kind == GermKind::RDP || kind == GermKind::Smooth; }

  std::strong_ordering operator<=>(const SingularityGerm& o) const;
  bool operator==(const SingularityGerm& o) const { return (*this <=> o) == 0; }
};

// Lexicographic minimum over the 2r rotations and reflections.
std::vector<Int> dihedral_normal_form(const std::vector<Int>& es);
SingularityGerm normalize_cusp(const std::vector<Int>& es);

Int multiplicity(const SingularityGerm& g);
IntersectionLattice resolution_lattice(const SingularityGerm& g);
std::vector<SingularityGerm> enumerate_types(Int max_mult, Int max_length);

// "c:3,2,2", "se:1", "t:2,3,7", "rdp", "smooth".
std::string to_string(const SingularityGerm& g);
SingularityGerm parse_germ(const std::string& text);  // shorthand or JSON

}  // namespace isurf
