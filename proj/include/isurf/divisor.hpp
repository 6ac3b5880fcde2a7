#pragma once

#include "isurf/germ.hpp"
#include "isurf/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace isurf {

using Rational = boost::multiprecision::cpp_rational;
using LatticePtr = std::shared_ptr<const IntersectionLattice>;

class DivisorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisorClass {
 public:
  DivisorClass(LatticePtr lat, std::vector<Int> coeffs);
  static DivisorClass zero(LatticePtr lat);
  static DivisorClass basis(LatticePtr lat, const std::string& label);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  const LatticePtr& lattice() const { return lat_; }

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(Int k, const DivisorClass& d);
  bool operator==(const DivisorClass& o) const;

 private:
  void require_same(const DivisorClass& o) const;
  LatticePtr lat_;
  std::vector<Int> coeffs_;
};

Int pair(const DivisorClass& a, const DivisorClass& b);

enum class CurveTag { Exceptional, FiberComponent, Section, Bisection, Other };
std::string to_string(CurveTag t);
CurveTag parse_curve_tag(const std::string& s);

struct Curve {
  std::string name;
  std::vector<Int> coeffs;
  CurveTag tag = CurveTag::Other;
};

struct SurfaceModel {
  std::string name;
  LatticePtr lattice = std::make_shared<IntersectionLattice>();
  std::vector<Int> K;
  Int chiO = 0;
  std::vector<Curve> curves;
  std::vector<std::vector<std::string>> divisors;
  std::vector<SingularityGerm> germs;
  // Facts the lattice cannot see, e.g. torsion relations.
  std::vector<std::string> annotations;

  DivisorClass cls(const std::vector<Int>& coeffs) const { return {lattice, coeffs}; }
  DivisorClass canonical() const { return cls(K); }
  DivisorClass curve(const std::string& name) const;
  bool has_curve(const std::string& name) const;
  DivisorClass group_sum(std::size_t i) const;
  // D' = sum of all groups except i.
  DivisorClass complement_sum(std::size_t i) const;
  DivisorClass L() const;
  DivisorClass M(std::size_t i) const;
  std::size_t k() const { return divisors.size(); }

  // Integer combination of curve names, basis labels, K, L, M<i> and D<i>
  // (group sums), e.g. "2F - C1 + K". Curve names shadow everything else.
  DivisorClass parse(const std::string& expr) const;
};

// Structural problems with a model (empty means consistent).
std::vector<std::string> model_issues(const SurfaceModel& s);

Int adjunction_genus(const DivisorClass& c, const SurfaceModel& s);
Rational riemann_roch_chi(const DivisorClass& d, const SurfaceModel& s);

SurfaceModel blowup(const SurfaceModel& s, const std::map<std::string, Int>& multiplicities,
                    const std::string& new_label);

struct NefResult {
  bool nef = true;
  std::vector<std::string> violated_by;
};
NefResult nef_check(const DivisorClass& d, const SurfaceModel& s);
bool class_expressions_agree(const DivisorClass& a, const DivisorClass& b, const SurfaceModel& s);

// Gram matrix of the components of group i.
IntersectionLattice group_lattice(const SurfaceModel& s, std::size_t i);

std::string format_class(const DivisorClass& d);
std::string format_rational(const Rational& q);

}  // namespace isurf
