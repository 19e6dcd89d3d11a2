#include "quadwalk/bivariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadwalk {

namespace upoly {

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly scale(const UPoly& a, const Rational& c) {
  if (c == 0) return {};
  UPoly r = a;
  for (auto& v : r) v *= c;
  return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lb;
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= c * b[k];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

UPoly monic_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return {};
  return scale(x, Rational(1) / x.back());
}

}  // namespace upoly

namespace bipoly {

void trim(BiPoly& p) {
  for (auto& c : p) upoly::trim(c);
  while (!p.empty() && p.back().empty()) p.pop_back();
}

bool is_zero(const BiPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const UPoly& c) { return c.empty(); });
}

int degree_y(const BiPoly& p) { return static_cast<int>(p.size()) - 1; }

int degree_x(const BiPoly& p) {
  int d = -1;
  for (const auto& c : p) d = std::max(d, upoly::degree(c));
  return d;
}

BiPoly add(const BiPoly& a, const BiPoly& b) {
  BiPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = upoly::add(k < a.size() ? a[k] : UPoly{}, k < b.size() ? b[k] : UPoly{});
  }
  trim(r);
  return r;
}

BiPoly sub(const BiPoly& a, const BiPoly& b) {
  BiPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = upoly::sub(k < a.size() ? a[k] : UPoly{}, k < b.size() ? b[k] : UPoly{});
  }
  trim(r);
  return r;
}

BiPoly mul(const BiPoly& a, const BiPoly& b) {
  if (a.empty() || b.empty()) return {};
  BiPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].empty()) continue;
      r[i + j] = upoly::add(r[i + j], upoly::mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

BiPoly mul(const BiPoly& a, const UPoly& c) {
  BiPoly r;
  for (const auto& coeff : a) r.push_back(upoly::mul(coeff, c));
  trim(r);
  return r;
}

BiPoly power(const BiPoly& a, int k) {
  BiPoly result{UPoly{Rational(1)}};
  BiPoly base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

BiPoly exact_div(const BiPoly& a, const UPoly& c) {
  BiPoly r;
  for (const auto& coeff : a) {
    UPoly q, rem;
    upoly::divmod(coeff, c, q, rem);
    if (!rem.empty()) throw std::domain_error("inexact polynomial division");
    r.push_back(q);
  }
  trim(r);
  return r;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (is_zero(b)) throw std::domain_error("polynomial division by zero");
  BiPoly rem = a;
  trim(rem);
  int db = degree_y(b);
  BiPoly q(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0);
  while (!rem.empty() && degree_y(rem) >= db) {
    int shift = degree_y(rem) - db;
    UPoly qc, r;
    upoly::divmod(rem.back(), b.back(), qc, r);
    if (!r.empty()) throw std::domain_error("inexact polynomial division");
    q[static_cast<std::size_t>(shift)] = qc;
    BiPoly term(static_cast<std::size_t>(shift) + 1);
    term[static_cast<std::size_t>(shift)] = qc;
    rem = sub(rem, mul(term, b));
  }
  if (!rem.empty()) throw std::domain_error("inexact polynomial division");
  trim(q);
  return q;
}

UPoly content(const BiPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? upoly::scale(c, Rational(1) / c.back()) : upoly::monic_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BiPoly primitive_part(const BiPoly& a) {
  if (is_zero(a)) return {};
  return exact_div(a, content(a));
}

BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  trim(r);
  int db = degree_y(b);
  const UPoly& lb = b.back();
  while (!r.empty() && degree_y(r) >= db) {
    int shift = degree_y(r) - db;
    BiPoly term(static_cast<std::size_t>(shift) + 1);
    term[static_cast<std::size_t>(shift)] = r.back();
    r = sub(mul(r, lb), mul(term, b));
  }
  return r;
}

Rational leading_coefficient(const BiPoly& a) {
  if (a.empty()) return 0;
  return a.back().back();
}

BiPoly gcd(const BiPoly& a0, const BiPoly& b0) {
  BiPoly a = a0, b = b0;
  trim(a);
  trim(b);
  if (a.empty() && b.empty()) return {};
  if (a.empty()) return mul(b, UPoly{Rational(1) / leading_coefficient(b)});
  if (b.empty()) return mul(a, UPoly{Rational(1) / leading_coefficient(a)});
  UPoly c = upoly::monic_gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (degree_y(a) < degree_y(b)) std::swap(a, b);
  while (!b.empty()) {
    BiPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.empty() ? r : primitive_part(r);
  }
  BiPoly g = mul(primitive_part(a), c);
  return mul(g, UPoly{Rational(1) / leading_coefficient(g)});
}

BiPoly from_polynomial(const LaurentPolynomial2& p) {
  BiPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < 0 || e[1] < 0) throw std::domain_error("negative exponent in polynomial conversion");
    auto iy = static_cast<std::size_t>(e[1]);
    auto ix = static_cast<std::size_t>(e[0]);
    if (r.size() <= iy) r.resize(iy + 1);
    if (r[iy].size() <= ix) r[iy].resize(ix + 1);
    r[iy][ix] = c;
  }
  trim(r);
  return r;
}

LaurentPolynomial2 to_polynomial(const BiPoly& p) {
  LaurentPolynomial2 r;
  for (std::size_t iy = 0; iy < p.size(); ++iy) {
    for (std::size_t ix = 0; ix < p[iy].size(); ++ix) {
      r.add_term({static_cast<int>(ix), static_cast<int>(iy)}, p[iy][ix]);
    }
  }
  return r;
}

}  // namespace bipoly

RationalExpr2 make_reduced(const BiPoly& num, const BiPoly& den) {
  if (bipoly::is_zero(den)) throw std::domain_error("identically zero denominator");
  if (bipoly::is_zero(num)) return RationalExpr2(RationalExpr2::Raw{}, LaurentPolynomial2(0), LaurentPolynomial2(1));
  BiPoly g = bipoly::gcd(num, den);
  BiPoly n = bipoly::exact_div(num, g);
  BiPoly d = bipoly::exact_div(den, g);
  Rational lc = bipoly::leading_coefficient(d);
  UPoly inv{Rational(1) / lc};
  return RationalExpr2(RationalExpr2::Raw{}, bipoly::to_polynomial(bipoly::mul(n, inv)),
                       bipoly::to_polynomial(bipoly::mul(d, inv)));
}

RationalExpr2::RationalExpr2(const LaurentPolynomial2& numerator, const LaurentPolynomial2& denominator) {
  if (denominator.is_zero()) throw std::domain_error("identically zero denominator");
  int sx = 0, sy = 0;
  for (const auto* p : {&numerator, &denominator}) {
    if (p->is_zero()) continue;
    sx = std::max(sx, -p->min_degree(0));
    sy = std::max(sy, -p->min_degree(1));
  }
  *this = make_reduced(bipoly::from_polynomial(numerator.shifted({sx, sy})),
                       bipoly::from_polynomial(denominator.shifted({sx, sy})));
}

int RationalExpr2::degree() const {
  int d = 0;
  for (const auto* p : {&num_, &den_}) {
    if (p->is_zero()) continue;
    d = std::max({d, p->max_degree(0), p->max_degree(1)});
  }
  return d;
}

bool RationalExpr2::is_laurent() const { return den_.size() == 1; }

LaurentPolynomial2 RationalExpr2::as_laurent() const {
  if (!is_laurent()) throw std::domain_error("expression is not a Laurent polynomial: " + to_string());
  const auto& [e, c] = *den_.terms().begin();
  return num_.shifted({-e[0], -e[1]}) * (Rational(1) / c);
}

namespace {

BiPoly as_bi(const LaurentPolynomial2& p) { return bipoly::from_polynomial(p); }

}  // namespace

RationalExpr2 operator+(const RationalExpr2& a, const RationalExpr2& b) {
  BiPoly n = bipoly::add(bipoly::mul(as_bi(a.num_), as_bi(b.den_)), bipoly::mul(as_bi(b.num_), as_bi(a.den_)));
  return make_reduced(n, bipoly::mul(as_bi(a.den_), as_bi(b.den_)));
}

RationalExpr2 operator-(const RationalExpr2& a) {
  return RationalExpr2(RationalExpr2::Raw{}, -a.num_, a.den_);
}

RationalExpr2 operator-(const RationalExpr2& a, const RationalExpr2& b) { return a + (-b); }

RationalExpr2 operator*(const RationalExpr2& a, const RationalExpr2& b) {
  return make_reduced(bipoly::mul(as_bi(a.num_), as_bi(b.num_)), bipoly::mul(as_bi(a.den_), as_bi(b.den_)));
}

RationalExpr2 operator/(const RationalExpr2& a, const RationalExpr2& b) {
  if (b.is_zero()) throw std::domain_error("division by zero expression");
  return make_reduced(bipoly::mul(as_bi(a.num_), as_bi(b.den_)), bipoly::mul(as_bi(a.den_), as_bi(b.num_)));
}

RationalExpr2 RationalExpr2::inverted() const {
  return RationalExpr2(num_.rescaled_exponents({-1, -1}), den_.rescaled_exponents({-1, -1}));
}

std::string RationalExpr2::to_string() const {
  if (den_ == LaurentPolynomial2(1)) return num_.to_string(kNamesXY);
  if (is_laurent()) return as_laurent().to_string(kNamesXY);
  return "(" + num_.to_string(kNamesXY) + ")/(" + den_.to_string(kNamesXY) + ")";
}

}  // namespace quadwalk
