#include "oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace oracle {

namespace {

std::vector<mpz_class> berkowitz(const IMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return {1};
  std::vector<mpz_class> poly = {1, -a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<mpz_class> q(r + 2);
    q[0] = 1;
    q[1] = -a[r][r];
    std::vector<mpz_class> x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = a[i][r];
    for (std::size_t k = 2; k <= r + 1; ++k) {
      mpz_class dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * x[i];
      q[k] = -dot;
      std::vector<mpz_class> y(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) y[i] += a[i][j] * x[j];
      x = y;
    }
    std::vector<mpz_class> next(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += q[i - j] * poly[j];
    poly = next;
  }
  return poly;
}

std::size_t sign_changes(const std::vector<mpz_class>& c) {
  std::size_t n = 0;
  int last = 0;
  for (const auto& v : c) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

std::vector<int> parse_code(const std::string& code) {
  std::vector<int> es;
  std::stringstream ss(code.substr(1));
  std::string part;
  while (std::getline(ss, part, '.')) es.push_back(std::stoi(part));
  return es;
}

std::vector<int> cycle(int head, int twos) {
  std::vector<int> v = {head};
  v.insert(v.end(), static_cast<std::size_t>(twos), 2);
  return v;
}

}  // namespace

Inertia inertia_by_charpoly(const IMatrix& a) {
  const auto p = berkowitz(a);  // p[0] x^n + ... + p[n]
  const std::size_t n = a.size();
  Inertia out;
  while (out.zero < n && p[n - out.zero] == 0) ++out.zero;
  out.pos = sign_changes(p);
  std::vector<mpz_class> flipped(p.size());
  for (std::size_t i = 0; i <= n; ++i) flipped[i] = ((n - i) % 2 == 0) ? p[i] : mpz_class(-p[i]);
  out.neg = sign_changes(flipped);
  return out;
}

std::vector<int> orbit_minimum(const std::vector<int>& seq) {
  std::set<std::vector<int>> orbit;
  auto s = seq;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      orbit.insert(s);
      std::rotate(s.begin(), s.begin() + 1, s.end());
    }
    std::reverse(s.begin(), s.end());
  }
  return *orbit.begin();
}

std::set<std::vector<int>> cycles_by_brute_force(int mult, int length) {
  std::set<std::vector<int>> out;
  if (length == 1) {
    out.insert({mult});
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == length) {
      if (left == 0) out.insert(orbit_minimum(cur));
      return;
    }
    for (int e = 2; e - 2 <= left; ++e) {
      cur.push_back(e);
      rec(left - (e - 2));
      cur.pop_back();
    }
  };
  rec(mult);
  return out;
}

std::string cusp_code(const std::vector<int>& es) {
  std::string s = "c";
  const auto nf = orbit_minimum(es);
  for (std::size_t i = 0; i < nf.size(); ++i) s += (i ? "." : "") + std::to_string(nf[i]);
  return s;
}

std::vector<std::string> germ_universe(int max_length) {
  std::vector<std::string> u = {"se1", "se2", "rdp", "smooth"};
  for (int m = 1; m <= 2; ++m)
    for (int len = 1; len <= max_length; ++len)
      for (const auto& c : cycles_by_brute_force(m, len)) u.push_back(cusp_code(c));
  return u;
}

bool directly_adjacent(const std::string& from, const std::string& to) {
  if (to == "rdp" || to == "smooth") return from != "rdp" && from != "smooth";
  if (from == "se1" || from == "se2") return to == from;
  if (from[0] != 'c') return false;
  const auto es = parse_code(from);
  const int r = static_cast<int>(es.size());
  std::set<std::string> t;
  int m = 0;
  for (int e : es) m += e - 2;
  if (r == 1) m = es[0];
  const int threes = static_cast<int>(std::count(es.begin(), es.end(), 3));
  if (m == 1) {
    for (int s = 2; s <= r; ++s) t.insert(cusp_code(cycle(3, s - 1)));
    t.insert("se1");
    t.insert("c1");
  } else if (r == 1) {
    t.insert("c2");
  } else if (threes == 0) {
    for (int s = 2; s <= r; ++s) t.insert(cusp_code(cycle(4, s - 1)));
    if (r >= 4) t.insert(cusp_code(cycle(3, r - 3)));
    if (r == 3) {
      t.insert("se1");
      t.insert("c1");
    }
    if (r == 2) t.insert("se1");
  } else {
    std::vector<int> pos;
    for (int i = 0; i < r; ++i)
      if (es[static_cast<std::size_t>(i)] == 3) pos.push_back(i);
    const int a = pos[1] - pos[0] - 1, b = r - 2 - a;
    auto two_threes = [](int x, int y) {
      std::vector<int> v = {3};
      v.insert(v.end(), static_cast<std::size_t>(x), 2);
      v.push_back(3);
      v.insert(v.end(), static_cast<std::size_t>(y), 2);
      return cusp_code(v);
    };
    if (a > 0) t.insert(two_threes(a - 1, b));
    if (b > 0) t.insert(two_threes(a, b - 1));
    if (a == 0 && b > 0) t.insert(cusp_code(cycle(4, b)));
    if (b == 0 && a > 0) t.insert(cusp_code(cycle(4, a)));
    if (a == 0 && b == 0) {
      t.insert("c2");
      t.insert("se2");
    }
  }
  return t.count(to) > 0;
}

std::set<std::string> reachable_by_bfs(const std::string& from, const std::vector<std::string>& universe) {
  std::set<std::string> seen = {from};
  std::deque<std::string> queue = {from};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    for (const auto& u : universe)
      if (!seen.count(u) && directly_adjacent(cur, u)) {
        seen.insert(u);
        queue.push_back(u);
      }
  }
  return seen;
}

}  // namespace oracle
