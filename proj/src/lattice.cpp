#include "isurf/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <set>

namespace isurf {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
         std::to_string(s.null) + ")";
}

IntersectionLattice::IntersectionLattice(std::vector<std::string> labels, Matrix gram)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
  const std::size_t n = labels_.size();
  if (gram_.size() != n) throw LatticeError("gram dimension does not match basis length");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw LatticeError("empty basis label");
    if (!seen.insert(l).second) throw LatticeError("duplicate basis label '" + l + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw LatticeError("gram row " + std::to_string(i) + " has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_[i][j] != gram_[j][i])
        throw LatticeError("gram not symmetric at (" + labels_[i] + "," + labels_[j] + ")");
}

std::optional<std::size_t> IntersectionLattice::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

IntersectionLattice IntersectionLattice::scaled(Int factor) const {
  if (factor <= 0) throw LatticeError("scale must be positive");
  Matrix g = gram_;
  for (auto& row : g)
    for (auto& x : row) x *= factor;
  return {labels_, g};
}

IntersectionLattice IntersectionLattice::restricted(const std::vector<std::size_t>& idx) const {
  std::vector<std::string> l;
  Matrix g(idx.size(), std::vector<Int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] >= rank()) throw LatticeError("restriction index out of range");
    l.push_back(labels_[idx[a]]);
    for (std::size_t b = 0; b < idx.size(); ++b) g[a][b] = gram_[idx[a]][idx[b]];
  }
  return {l, g};
}

IntersectionLattice IntersectionLattice::extended(const std::string& label, Int square) const {
  auto l = labels_;
  l.push_back(label);
  Matrix g = gram_;
  for (auto& row : g) row.push_back(0);
  g.emplace_back(l.size(), 0);
  g.back().back() = square;
  return {l, g};
}

Signature signature(const Matrix& gram, const std::vector<std::size_t>& order_in) {
  const std::size_t n = gram.size();
  std::vector<std::size_t> order = order_in;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != n) throw LatticeError("pivot order has wrong length");

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram[i][j];
  std::vector<bool> live(n, true);
  Signature s;

  for (std::size_t i : order) {
    if (!live[i]) continue;
    if (a[i][i] != 0) {
      (a[i][i] > 0 ? s.positive : s.negative)++;
      live[i] = false;
      for (std::size_t p = 0; p < n; ++p) {
        if (!live[p] || a[p][i] == 0) continue;
        Rational f = a[p][i] / a[i][i];
        for (std::size_t q = 0; q < n; ++q)
          if (live[q]) a[p][q] -= f * a[i][q];
      }
      continue;
    }
    std::optional<std::size_t> partner;
    for (std::size_t j = 0; j < n; ++j)
      if (live[j] && j != i && a[i][j] != 0) {
        partner = j;
        break;
      }
    live[i] = false;
    if (!partner) {
      ++s.null;
      continue;
    }
    // Block [[0,b],[b,c]] has determinant -b^2 < 0: one positive, one negative.
    const std::size_t j = *partner;
    live[j] = false;
    ++s.positive;
    ++s.negative;
    const Rational b = a[i][j], c = a[j][j];
    const Rational det = -b * b;
    // inverse = (1/det) [[c,-b],[-b,0]]
    const Rational h00 = c / det, h01 = -b / det, h11 = 0;
    std::vector<std::size_t> rest;
    for (std::size_t p = 0; p < n; ++p)
      if (live[p]) rest.push_back(p);
    std::vector<Rational> ui(n), uj(n);
    for (std::size_t p : rest) {
      ui[p] = h00 * a[i][p] + h01 * a[j][p];
      uj[p] = h01 * a[i][p] + h11 * a[j][p];
    }
    for (std::size_t p : rest)
      for (std::size_t q : rest) a[p][q] -= a[p][i] * ui[q] + a[p][j] * uj[q];
  }
  return s;
}

Signature signature(const IntersectionLattice& lat) { return signature(lat.gram()); }

bool is_negative_definite(const IntersectionLattice& lat) {
  return signature(lat).negative == lat.rank();
}

namespace {

void add_edge(Matrix& g, std::size_t i, std::size_t j) {
  g[i][j] += 1;
  g[j][i] += 1;
}

void add_cycle(Matrix& g, std::size_t first, std::size_t len) {
  if (len < 2) return;
  for (std::size_t k = 0; k < len; ++k) add_edge(g, first + k, first + (k + 1) % len);
}

}  // namespace

IntersectionLattice make_named_lattice(LatticeFamily family, Int n, std::optional<Int> m, Int scale) {
  if (n < 1) throw LatticeError("n must be at least 1");
  if (scale < 1) throw LatticeError("scale must be positive");
  std::vector<std::string> labels;
  Matrix g;
  switch (family) {
    case LatticeFamily::Lambda0: {
      if (m) throw LatticeError("Lambda0 takes no second parameter");
      const auto len = static_cast<std::size_t>(n + 1);
      g.assign(len, std::vector<Int>(len, 0));
      for (std::size_t i = 0; i < len; ++i) {
        labels.push_back("e" + std::to_string(i));
        g[i][i] = i == 0 ? 0 : -2;
      }
      add_cycle(g, 0, len);
      break;
    }
    case LatticeFamily::Lambda1: {
      if (!m || *m < 1) throw LatticeError("Lambda1 needs m >= 1");
      const auto nn = static_cast<std::size_t>(n), mm = static_cast<std::size_t>(*m);
      const std::size_t len = nn + mm + 2;
      g.assign(len, std::vector<Int>(len, 0));
      for (std::size_t i = 1; i <= nn; ++i) labels.push_back("e" + std::to_string(i));
      for (std::size_t i = 1; i <= mm; ++i) labels.push_back("f" + std::to_string(i));
      labels.push_back("g1");
      labels.push_back("g2");
      for (std::size_t i = 0; i < len; ++i) g[i][i] = -2;
      const std::size_t e0 = 0, f0 = nn, g1 = nn + mm, g2 = g1 + 1;
      for (std::size_t i = 0; i + 1 < nn; ++i) add_edge(g, e0 + i, e0 + i + 1);
      for (std::size_t i = 0; i + 1 < mm; ++i) add_edge(g, f0 + i, f0 + i + 1);
      add_edge(g, e0, g1);
      add_edge(g, f0, g1);
      add_edge(g, e0 + nn - 1, g2);
      add_edge(g, f0 + mm - 1, g2);
      add_edge(g, g1, g2);
      break;
    }
    case LatticeFamily::Lambda2: {
      if (!m || *m < 1) throw LatticeError("Lambda2 needs m >= 1");
      const auto a = static_cast<std::size_t>(n + 1), b = static_cast<std::size_t>(*m + 1);
      g.assign(a + b, std::vector<Int>(a + b, 0));
      for (std::size_t i = 0; i < a; ++i) labels.push_back("e" + std::to_string(i));
      for (std::size_t i = 0; i < b; ++i) labels.push_back("f" + std::to_string(i));
      for (std::size_t i = 0; i < a + b; ++i) g[i][i] = -2;
      add_cycle(g, 0, a);
      add_cycle(g, a, b);
      add_edge(g, 0, a);
      break;
    }
  }
  return IntersectionLattice(labels, g).scaled(scale);
}

std::optional<LatticeFamily> parse_family(const std::string& s) {
  if (s == "Lambda0") return LatticeFamily::Lambda0;
  if (s == "Lambda1") return LatticeFamily::Lambda1;
  if (s == "Lambda2") return LatticeFamily::Lambda2;
  return std::nullopt;
}

}  // namespace isurf
