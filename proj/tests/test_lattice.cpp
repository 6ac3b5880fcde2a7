#include "isurf/lattice.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace isurf;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n, Int lo, Int hi) {
  std::uniform_int_distribution<Int> d(lo, hi);
  Matrix m(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = d(rng);
  return m;
}

// Low rank and zero-diagonal cases are where elimination goes wrong.
Matrix random_degenerate(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<Int> d(-3, 3);
  std::uniform_int_distribution<std::size_t> rk(0, n);
  const std::size_t r = rk(rng);
  std::vector<std::vector<Int>> v(r, std::vector<Int>(n));
  std::vector<Int> w(r);
  for (auto& row : v)
    for (auto& x : row) x = d(rng);
  for (auto& x : w) x = d(rng) >= 0 ? 1 : -1;
  Matrix m(n, std::vector<Int>(n, 0));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] += w[k] * v[k][i] * v[k][j];
  if (n > 1 && rng() % 2) {
    for (std::size_t i = 0; i < n; i += 2) m[i][i] = 0;
  }
  return m;
}

Signature from_oracle(const Matrix& m) {
  const auto in = oracle::inertia_by_charpoly(m);
  return {in.pos, in.neg, in.zero};
}

}  // namespace

TEST_CASE("signature of small fixed forms") {
  CHECK(signature(Matrix{{-2}}) == Signature{0, 1, 0});
  CHECK(signature(Matrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
  CHECK(signature(Matrix{{0, 0}, {0, 0}}) == Signature{0, 0, 2});
  CHECK(signature(Matrix{}) == Signature{0, 0, 0});
  CHECK(is_negative_definite(IntersectionLattice{}));
}

TEST_CASE("named lattice families") {
  const auto l0 = make_named_lattice(LatticeFamily::Lambda0, 2);
  CHECK(l0.gram() == Matrix{{0, 1, 1}, {1, -2, 1}, {1, 1, -2}});
  CHECK(signature(make_named_lattice(LatticeFamily::Lambda0, 3)) == Signature{1, 3, 0});
  CHECK_FALSE(is_negative_definite(make_named_lattice(LatticeFamily::Lambda0, 3)));
  CHECK(signature(make_named_lattice(LatticeFamily::Lambda2, 2, 2)) == Signature{1, 5, 0});
  const auto l11 = make_named_lattice(LatticeFamily::Lambda1, 1, 1);
  CHECK(l11.rank() == 4);
  CHECK(signature(l11) == Signature{1, 3, 0});
  const auto scaled = make_named_lattice(LatticeFamily::Lambda2, 2, 2, 2);
  CHECK(scaled.gram() == make_named_lattice(LatticeFamily::Lambda2, 2, 2).scaled(2).gram());
  CHECK(signature(scaled) == Signature{1, 5, 0});
  CHECK_THROWS_AS(make_named_lattice(LatticeFamily::Lambda1, 2), LatticeError);
  CHECK_THROWS_AS(make_named_lattice(LatticeFamily::Lambda0, 0), LatticeError);
}

TEST_CASE("named lattices agree with the charpoly oracle over the full range") {
  for (Int n = 1; n <= 20; ++n) {
    const auto g = make_named_lattice(LatticeFamily::Lambda0, n).gram();
    CHECK(from_oracle(g) == Signature{1, static_cast<std::size_t>(n), 0});
  }
  for (Int n = 1; n <= 12; n += 3)
    for (Int m = 1; m <= 12; m += 4)
      for (auto f : {LatticeFamily::Lambda1, LatticeFamily::Lambda2})
        CHECK(from_oracle(make_named_lattice(f, n, m).gram()) == signature(make_named_lattice(f, n, m)));
}

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(IntersectionLattice({"a", "b"}, Matrix{{1, 2}, {3, 1}}), LatticeError);
  CHECK_THROWS_AS(IntersectionLattice({"a", "a"}, Matrix{{1, 0}, {0, 1}}), LatticeError);
  CHECK_THROWS_AS(IntersectionLattice({"a"}, Matrix{{1, 0}, {0, 1}}), LatticeError);
}

TEST_CASE("random 5x5 forms match the oracle") {
  std::mt19937_64 rng(20261016);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_symmetric(rng, 5, -4, 4);
    CHECK(signature(m) == from_oracle(m));
  }
}

TEST_CASE("pivot order never changes the result") {
  std::mt19937_64 rng(7);
  std::mt19937_64 order_a(11), order_b(13);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const auto m = t % 2 ? random_symmetric(rng, n, -3, 3) : random_degenerate(rng, n);
    std::vector<std::size_t> pa(n), pb(n);
    std::iota(pa.begin(), pa.end(), 0);
    std::iota(pb.begin(), pb.end(), 0);
    std::shuffle(pa.begin(), pa.end(), order_a);
    std::shuffle(pb.begin(), pb.end(), order_b);
    const auto sa = signature(m, pa), sb = signature(m, pb);
    REQUIRE(sa == sb);
    REQUIRE(sa == from_oracle(m));
  }
}

TEST_CASE("signature is invariant under relabeling and scaling") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const auto m = random_symmetric(rng, n, -5, 5);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Matrix q(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q[i][j] = m[p[i]][p[j]];
    CHECK(signature(q) == signature(m));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    const IntersectionLattice lat(labels, m);
    CHECK(signature(lat.scaled(3)) == signature(lat));
  }
}
