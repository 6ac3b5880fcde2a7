#include "isurf/divisor.hpp"

#include <cctype>
#include <limits>
#include <set>

namespace isurf {

DivisorClass::DivisorClass(LatticePtr lat, std::vector<Int> coeffs)
    : lat_(std::move(lat)), coeffs_(std::move(coeffs)) {
  if (!lat_) throw DivisorError("divisor class without lattice");
  if (coeffs_.size() != lat_->rank())
    throw DivisorError("coefficient vector has length " + std::to_string(coeffs_.size()) +
                       ", lattice rank is " + std::to_string(lat_->rank()));
}

DivisorClass DivisorClass::zero(LatticePtr lat) {
  const auto n = lat->rank();
  return {std::move(lat), std::vector<Int>(n, 0)};
}

DivisorClass DivisorClass::basis(LatticePtr lat, const std::string& label) {
  auto idx = lat->index_of(label);
  if (!idx) throw DivisorError("no basis vector '" + label + "'");
  auto d = zero(std::move(lat));
  d.coeffs_[*idx] = 1;
  return d;
}

void DivisorClass::require_same(const DivisorClass& o) const {
  if (lat_ != o.lat_ && !(*lat_ == *o.lat_)) throw DivisorError("classes live on different lattices");
}

namespace {

Int checked(__int128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw DivisorError("integer overflow in class arithmetic");
  return static_cast<Int>(v);
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  require_same(o);
  auto c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked(static_cast<__int128>(c[i]) + o.coeffs_[i]);
  return {lat_, c};
}

DivisorClass DivisorClass::operator-() const { return (-1) * *this; }

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + (-o); }

DivisorClass operator*(Int k, const DivisorClass& d) {
  auto c = d.coeffs_;
  for (auto& x : c) x = checked(static_cast<__int128>(x) * k);
  return {d.lat_, c};
}

bool DivisorClass::operator==(const DivisorClass& o) const {
  require_same(o);
  return coeffs_ == o.coeffs_;
}

Int pair(const DivisorClass& a, const DivisorClass& b) {
  if (a.lattice() != b.lattice() && !(*a.lattice() == *b.lattice()))
    throw DivisorError("pairing classes from different lattices");
  const auto& g = a.lattice()->gram();
  __int128 acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < g.size(); ++j) row += static_cast<__int128>(g[i][j]) * b.coeffs()[j];
    acc += row * a.coeffs()[i];
  }
  return checked(acc);
}

std::string to_string(CurveTag t) {
  switch (t) {
    case CurveTag::Exceptional: return "exceptional";
    case CurveTag::FiberComponent: return "fiber-component";
    case CurveTag::Section: return "section";
    case CurveTag::Bisection: return "bisection";
    case CurveTag::Other: return "other";
  }
  return "other";
}

CurveTag parse_curve_tag(const std::string& s) {
  for (auto t : {CurveTag::Exceptional, CurveTag::FiberComponent, CurveTag::Section,
                 CurveTag::Bisection, CurveTag::Other})
    if (to_string(t) == s) return t;
  throw DivisorError("unknown curve tag '" + s + "'");
}

bool SurfaceModel::has_curve(const std::string& n) const {
  for (const auto& c : curves)
    if (c.name == n) return true;
  return false;
}

DivisorClass SurfaceModel::curve(const std::string& n) const {
  for (const auto& c : curves)
    if (c.name == n) return cls(c.coeffs);
  throw DivisorError("no declared curve '" + n + "'");
}

DivisorClass SurfaceModel::group_sum(std::size_t i) const {
  auto d = DivisorClass::zero(lattice);
  for (const auto& n : divisors.at(i)) d = d + curve(n);
  return d;
}

DivisorClass SurfaceModel::complement_sum(std::size_t i) const {
  auto d = DivisorClass::zero(lattice);
  for (std::size_t j = 0; j < divisors.size(); ++j)
    if (j != i) d = d + group_sum(j);
  return d;
}

DivisorClass SurfaceModel::L() const {
  auto d = canonical();
  for (std::size_t i = 0; i < divisors.size(); ++i) d = d + group_sum(i);
  return d;
}

DivisorClass SurfaceModel::M(std::size_t i) const { return canonical() + complement_sum(i); }

DivisorClass SurfaceModel::parse(const std::string& expr) const {
  auto total = DivisorClass::zero(lattice);
  std::size_t p = 0;
  auto skip = [&] {
    while (p < expr.size() && std::isspace(static_cast<unsigned char>(expr[p]))) ++p;
  };
  auto fail = [&](const std::string& why) {
    throw DivisorError("cannot parse '" + expr + "' at offset " + std::to_string(p) + ": " + why);
  };
  bool first = true;
  skip();
  if (p == expr.size()) fail("empty expression");
  while (true) {
    skip();
    if (p == expr.size()) break;
    Int sign = 1;
    if (expr[p] == '+' || expr[p] == '-') {
      sign = expr[p] == '-' ? -1 : 1;
      ++p;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Int coef = 1;
    bool has_num = false;
    if (p < expr.size() && std::isdigit(static_cast<unsigned char>(expr[p]))) {
      coef = 0;
      while (p < expr.size() && std::isdigit(static_cast<unsigned char>(expr[p])))
        coef = checked(static_cast<__int128>(coef) * 10 + (expr[p++] - '0'));
      has_num = true;
      skip();
      if (p < expr.size() && expr[p] == '*') {
        ++p;
        skip();
      }
    }
    std::string name;
    while (p < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[p])) || expr[p] == '_' ||
                               expr[p] == '\''))
      name += expr[p++];
    if (name.empty()) {
      if (!has_num) fail("expected a term");
      if (coef != 0) fail("bare nonzero integer");
      continue;
    }
    DivisorClass term = [&]() -> DivisorClass {
      if (has_curve(name)) return curve(name);
      if (lattice->index_of(name)) return DivisorClass::basis(lattice, name);
      if (name == "K") return canonical();
      if (name == "L") return L();
      if (name.size() > 1 && (name[0] == 'M' || name[0] == 'D') &&
          name.find_first_not_of("0123456789", 1) == std::string::npos) {
        const auto i = std::stoul(name.substr(1));
        if (i >= 1 && i <= divisors.size()) return name[0] == 'M' ? M(i - 1) : group_sum(i - 1);
      }
      fail("unknown symbol '" + name + "'");
      return canonical();
    }();
    total = total + (sign * coef) * term;
  }
  return total;
}

std::vector<std::string> model_issues(const SurfaceModel& s) {
  std::vector<std::string> out;
  const auto n = s.lattice->rank();
  if (s.K.size() != n) out.push_back("K has wrong length");
  std::set<std::string> names;
  for (const auto& c : s.curves) {
    if (c.name.empty()) out.push_back("curve with empty name");
    if (!names.insert(c.name).second) out.push_back("duplicate curve '" + c.name + "'");
    if (c.coeffs.size() != n) out.push_back("curve '" + c.name + "' has wrong length");
  }
  std::set<std::string> used;
  for (std::size_t i = 0; i < s.divisors.size(); ++i) {
    if (s.divisors[i].empty()) out.push_back("divisor group " + std::to_string(i + 1) + " is empty");
    for (const auto& c : s.divisors[i]) {
      if (!names.count(c)) out.push_back("divisor group references unknown curve '" + c + "'");
      if (!used.insert(c).second) out.push_back("curve '" + c + "' appears in two groups");
    }
  }
  if (s.germs.size() != s.divisors.size()) out.push_back("germ list does not align with divisor groups");
  for (const auto& g : s.germs)
    if (!g.is_elliptic()) out.push_back("marked germ " + to_string(g) + " is not simple elliptic or cusp");
  return out;
}

Int adjunction_genus(const DivisorClass& c, const SurfaceModel& s) {
  const Int v = pair(c, c) + pair(s.canonical(), c);
  if (v % 2 != 0) throw DivisorError("C^2 + K.C is odd; the model is inconsistent");
  return 1 + v / 2;
}

Rational riemann_roch_chi(const DivisorClass& d, const SurfaceModel& s) {
  return Rational(s.chiO) + Rational(pair(d, d) - pair(s.canonical(), d)) / 2;
}

SurfaceModel blowup(const SurfaceModel& s, const std::map<std::string, Int>& multiplicities,
                    const std::string& new_label) {
  if (new_label.empty()) throw DivisorError("empty blowup label");
  if (s.lattice->index_of(new_label) || s.has_curve(new_label) || new_label == "K")
    throw DivisorError("duplicate label '" + new_label + "'");
  for (const auto& [name, mult] : multiplicities) {
    if (!s.has_curve(name)) throw DivisorError("blowup multiplicity for unknown curve '" + name + "'");
    if (mult < 0) throw DivisorError("negative multiplicity for '" + name + "'");
  }
  SurfaceModel out = s;
  out.lattice = std::make_shared<IntersectionLattice>(s.lattice->extended(new_label, -1));
  out.K.push_back(1);
  for (auto& c : out.curves) {
    auto it = multiplicities.find(c.name);
    c.coeffs.push_back(it == multiplicities.end() ? 0 : -it->second);
  }
  std::vector<Int> e(out.lattice->rank(), 0);
  e.back() = 1;
  out.curves.push_back({new_label, e, CurveTag::Exceptional});
  return out;
}

NefResult nef_check(const DivisorClass& d, const SurfaceModel& s) {
  NefResult r;
  for (const auto& c : s.curves)
    if (pair(d, s.cls(c.coeffs)) < 0) r.violated_by.push_back(c.name);
  r.nef = r.violated_by.empty();
  return r;
}

bool class_expressions_agree(const DivisorClass& a, const DivisorClass& b, const SurfaceModel& s) {
  for (const auto& c : s.curves) {
    const auto x = s.cls(c.coeffs);
    if (pair(a, x) != pair(b, x)) return false;
  }
  return true;
}

IntersectionLattice group_lattice(const SurfaceModel& s, std::size_t i) {
  const auto& names = s.divisors.at(i);
  Matrix g(names.size(), std::vector<Int>(names.size()));
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = 0; b < names.size(); ++b) g[a][b] = pair(s.curve(names[a]), s.curve(names[b]));
  return {names, g};
}

std::string format_class(const DivisorClass& d) {
  std::string out;
  const auto& labels = d.lattice()->labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Int c = d.coeffs()[i];
    if (c == 0) continue;
    const Int a = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1) out += std::to_string(a);
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_rational(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace isurf
