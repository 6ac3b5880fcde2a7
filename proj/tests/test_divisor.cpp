#include "isurf/builders.hpp"
#include "isurf/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace isurf;

TEST_CASE("pairing") {
  auto s = build_stratum(Stratum::N1);
  const auto L = s.curve("F") + s.curve("D1");
  CHECK(pair(L, L) == 1);
  CHECK(pair(L, DivisorClass::zero(s.lattice)) == 0);
  const auto dc = build_double_cover(1, 3);
  CHECK(pair(dc.base.parse("4sigma0 + 5f + 2d2"), dc.base.parse("sigma0 + 3f - e")) == 13);
  const auto other = projective_plane();
  CHECK_THROWS_AS(pair(L, other.canonical()), DivisorError);
}

TEST_CASE("adjunction genus") {
  const auto p2 = projective_plane();
  const auto s = blowup(p2, {}, "C");
  CHECK(adjunction_genus(s.curve("C"), s) == 0);
  CHECK(adjunction_genus(s.parse("3H"), s) == 1);
  CHECK(adjunction_genus(s.parse("2H"), s) == 0);
  for (const auto& v : builder_variants()) {
    const auto y = build_stratum(v.stratum, v.options);
    for (std::size_t i = 0; i < y.k(); ++i) CHECK(adjunction_genus(y.group_sum(i), y) == 1);
  }
  SurfaceModel bad = p2;
  bad.K = {-2};
  CHECK_THROWS_AS(adjunction_genus(bad.parse("H"), bad), DivisorError);
}

TEST_CASE("Riemann-Roch") {
  const auto x0 = rational_elliptic_with_half_fiber();
  CHECK(riemann_roch_chi(x0.parse("E + F"), x0) == 2);
  CHECK(riemann_roch_chi(DivisorClass::zero(x0.lattice), x0) == x0.chiO);
  const auto y = build_stratum(Stratum::N22);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<Int> v(y.lattice->rank());
    for (auto& x : v) x = static_cast<Int>(rng() % 7) - 3;
    const auto d = y.cls(v);
    CHECK(riemann_roch_chi(d, y) == riemann_roch_chi(y.canonical() - d, y));
  }
}

TEST_CASE("blowup") {
  const auto p2 = projective_plane();
  const auto s = blowup(p2, {{"line", 2}}, "C");
  CHECK(s.lattice->rank() == 2);
  CHECK(pair(s.canonical(), s.canonical()) == 9 - 1);
  CHECK(s.chiO == p2.chiO);
  CHECK(s.curve("line") == s.parse("H - 2C"));
  const auto pull = DivisorClass::basis(s.lattice, "H");
  CHECK(pair(pull, pull) == 1);
  CHECK(pair(pull, s.curve("C")) == 0);
  // genus of a proper transform drops by mu(mu-1)/2
  SurfaceModel with_cubic = p2;
  with_cubic.curves.push_back({"cubic", {3}, CurveTag::Other});
  for (Int mu = 0; mu <= 3; ++mu) {
    const auto b = blowup(with_cubic, {{"cubic", mu}}, "C");
    CHECK(adjunction_genus(b.curve("cubic"), b) == 1 - mu * (mu - 1) / 2);
  }
  CHECK_THROWS_AS(blowup(s, {}, "C"), DivisorError);
  CHECK_THROWS_AS(blowup(s, {{"nope", 1}}, "C2"), DivisorError);
  CHECK_THROWS_AS(blowup(s, {{"line", -1}}, "C2"), DivisorError);
}

TEST_CASE("sextic through nine points") {
  auto s = projective_plane();
  for (int i = 1; i <= 9; ++i) s = blowup(s, {}, "E" + std::to_string(i));
  const auto G = s.parse("6H - E1 - 2E2 - 2E3 - 2E4 - 2E5 - 2E6 - 2E7 - 2E8 - 2E9");
  const auto F = s.parse("3H - E1 - E2 - E3 - E4 - E5 - E6 - E7 - E8 - E9");
  CHECK(pair(G, G) == 3);
  CHECK(pair(G, F) == 1);
  CHECK(pair(s.canonical(), G) == -1);
  CHECK(adjunction_genus(G, s) == 2);
}

TEST_CASE("nef and class agreement") {
  const auto y21 = build_stratum(Stratum::N21);
  CHECK(nef_check(y21.M(1), y21).nef);
  CHECK(nef_check(DivisorClass::zero(y21.lattice), y21).nef);
  const auto y211 = build_stratum(Stratum::N211);
  const auto M1 = y211.parse("f - C1");
  CHECK(M1 == y211.M(0));
  CHECK(pair(M1, y211.curve("D1")) == 2);
  const auto r = nef_check(M1, y211);
  CHECK_FALSE(r.nef);
  CHECK(r.violated_by == std::vector<std::string>{"f1"});
  const auto y22 = build_stratum(Stratum::N22);
  CHECK(class_expressions_agree(y22.parse("C1 + D1"), y22.parse("C2 + D2"), y22));
  CHECK(class_expressions_agree(y22.L(), y22.L(), y22));
  CHECK_FALSE(class_expressions_agree(y22.curve("C1"), y22.curve("C2"), y22));
}

TEST_CASE("expression parser") {
  const auto y = build_stratum(Stratum::N22);
  CHECK(y.parse("L") == y.canonical() + y.group_sum(0) + y.group_sum(1));
  CHECK(y.parse("M1") == y.M(0));
  CHECK(y.parse("2 * C1 - C1") == y.curve("C1"));
  CHECK(y.parse("0") == DivisorClass::zero(y.lattice));
  CHECK_THROWS_AS(y.parse(""), DivisorError);
  CHECK_THROWS_AS(y.parse("C1 C2"), DivisorError);
  CHECK_THROWS_AS(y.parse("Q"), DivisorError);
  CHECK_THROWS_AS(y.parse("3"), DivisorError);
}

TEST_CASE("model JSON round trip and schema errors") {
  for (const auto& v : builder_variants()) {
    const auto y = build_stratum(v.stratum, v.options);
    const auto back = model_from_json(to_json(y));
    CHECK(*back.lattice == *y.lattice);
    CHECK(back.K == y.K);
    CHECK(back.divisors == y.divisors);
    CHECK(back.germs == y.germs);
  }
  auto j = to_json(build_stratum(Stratum::N2));
  j["lattice"]["gram"][0][1] = 5;
  CHECK_THROWS_AS(model_from_json(j), SchemaError);
  auto k = to_json(build_stratum(Stratum::N2));
  k["divisors"][0][0] = "missing";
  CHECK_THROWS_AS(model_from_json(k), SchemaError);
}
