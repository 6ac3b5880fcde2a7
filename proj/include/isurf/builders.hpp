#pragma once

#include "isurf/adjacency.hpp"
#include "isurf/divisor.hpp"
#include "isurf/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isurf {

class BuilderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Only the (2,1) rational stratum has more than one realization: the two
// blown-up points are distinct (Generic), or infinitely near at the node of
// the fiber G (NodeOfFiber) or at the node of the bisection (NodeOfBisection).
enum class Realization { Generic, NodeOfFiber, NodeOfBisection };
std::string to_string(Realization r);
Realization parse_realization(const std::string& s);

struct StratumOptions {
  // One germ per marked point, in the stratum's order (larger multiplicity
  // first). Empty means simple elliptic germs throughout.
  std::vector<SingularityGerm> germs;
  Realization realization = Realization::Generic;
};

SurfaceModel build_stratum(Stratum s, const StratumOptions& opt = {});

struct BuilderVariant {
  std::string id;
  Stratum stratum;
  StratumOptions options;
};
// The fixed catalogue exercised by tests and the replication suite.
std::vector<BuilderVariant> builder_variants();

// Base surfaces used by the builders, exposed for direct arithmetic.
SurfaceModel projective_plane();              // basis H, K = -3H
SurfaceModel ruled_surface_x1();              // basis sigma, f over an elliptic curve
SurfaceModel rational_elliptic_with_half_fiber();  // basis F, E with E.F = 1

Report verify_I_surface(const SurfaceModel& s);

struct FibrationData {
  Int g = 0;
  Int chi = 0;
  std::vector<Int> mults;
};
struct CanonicalBundleCoeffs {
  Int fiber_coefficient;
  std::vector<Int> multiple_fiber_coefficients;
  Rational kodaira_indicator;
};
CanonicalBundleCoeffs canonical_bundle_coeffs(const FibrationData& fd);

struct LengthCounts {
  Int lZ;
  std::optional<Int> lW;
};
LengthCounts c2_length_counts(Int p_g, std::optional<Int> r = std::nullopt);

struct DoubleCoverModel {
  Int N = 0, k = 0;
  SurfaceModel base;  // blown-up Hirzebruch surface, basis sigma0, f, e, d2
  std::vector<Int> d1, B, B0, K;
  std::vector<Int> half_B;  // B/2
  Int p_g = 0;
  Int sigma_tilde_sq = 0;
  Int sigma_sq = 0;
  Int pa_sigma = 0;

  DivisorClass cls(const std::vector<Int>& v) const { return base.cls(v); }
};
DoubleCoverModel build_double_cover(Int N, Int k);

// Cover-side classes are rational combinations of pullbacks:
// e_i = nu^*d_i / 2, F' = nu^*e, Sigma~ = nu^*sigma0.
// Grammar: terms like "2e1", "-F'", "Sigma~", "nu*f", "3 nu*d2".
Int cover_pairing(const std::string& a, const std::string& b, const DoubleCoverModel& dc);

// Pairing values behind the vanishing theorems, with their length thresholds.
Report vanishing_bound_checks(std::optional<Int> cusp_length = std::nullopt);

}  // namespace isurf
