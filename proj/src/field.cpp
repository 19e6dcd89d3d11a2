#include "quadwalk/field.hpp"

#include "quadwalk/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace quadwalk {

namespace {

// sign of p + q√2
int sign_sqrt2(const Rational& p, const Rational& q) {
  int sp = sgn(p), sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  Rational lhs = p * p, rhs = 2 * q * q;
  int cmp = ::cmp(lhs, rhs);
  return cmp > 0 ? sp : (cmp < 0 ? sq : 0);
}

// (p1 + q1√2)(p2 + q2√2)
std::pair<Rational, Rational> mul_sqrt2(const Rational& p1, const Rational& q1, const Rational& p2, const Rational& q2) {
  return {p1 * p2 + 2 * q1 * q2, p1 * q2 + q1 * p2};
}

RealQuad sigma2(const RealQuad& x) { return {x.a(), -x.b(), x.c(), -x.d()}; }
RealQuad sigma3(const RealQuad& x) { return {x.a(), x.b(), -x.c(), -x.d()}; }

std::string term_string(const Rational& q, const char* surd, bool first) {
  std::ostringstream out;
  Rational mag = abs(q);
  if (!first) out << (sgn(q) < 0 ? " - " : " + ");
  else if (sgn(q) < 0) out << "-";
  if (surd == nullptr) {
    out << quadwalk::to_string(mag);
  } else if (mag == 1) {
    out << "sqrt(" << surd << ")";
  } else if (mag.get_den() == 1) {
    out << quadwalk::to_string(mag) << "*sqrt(" << surd << ")";
  } else {
    Rational num(mag.get_num());
    if (num == 1) out << "sqrt(" << surd << ")/" << quadwalk::to_string(Integer(mag.get_den()));
    else out << quadwalk::to_string(num) << "*sqrt(" << surd << ")/" << quadwalk::to_string(Integer(mag.get_den()));
  }
  return out.str();
}

}  // namespace

RealQuad operator+(const RealQuad& x, const RealQuad& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
}

RealQuad operator-(const RealQuad& x, const RealQuad& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
}

RealQuad operator-(const RealQuad& x) { return {-x.a_, -x.b_, -x.c_, -x.d_}; }

RealQuad operator*(const RealQuad& x, const RealQuad& y) {
  const Rational &a = x.a_, &b = x.b_, &c = x.c_, &d = x.d_;
  const Rational &e = y.a_, &f = y.b_, &g = y.c_, &h = y.d_;
  return {a * e + 2 * b * f + 3 * c * g + 6 * d * h,
          a * f + b * e + 3 * c * h + 3 * d * g,
          a * g + c * e + 2 * b * h + 2 * d * f,
          a * h + d * e + b * g + c * f};
}

int RealQuad::sign() const {
  // x = u + v√3 with u = a + b√2, v = c + d√2
  int su = sign_sqrt2(a_, b_), sv = sign_sqrt2(c_, d_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  auto [u2a, u2b] = mul_sqrt2(a_, b_, a_, b_);
  auto [v2a, v2b] = mul_sqrt2(c_, d_, c_, d_);
  int cmp = sign_sqrt2(u2a - 3 * v2a, u2b - 3 * v2b);
  return cmp > 0 ? su : (cmp < 0 ? sv : 0);
}

RealQuad RealQuad::inverse() const {
  if (is_zero()) throw Error("division by zero in Q(sqrt2, sqrt3)");
  RealQuad s2 = sigma2(*this), s3 = sigma3(*this), s23 = sigma2(s3);
  RealQuad conj = s2 * s3 * s23;
  RealQuad norm = *this * conj;
  Rational inv = 1 / norm.a_;
  return conj * RealQuad(inv);
}

RealQuad RealQuad::sqrt_of_rational(const Rational& q) {
  if (sgn(q) < 0) throw Error("square root of a negative rational");
  if (sgn(q) == 0) return {};
  // √(p/r) = √(p r)/r
  Integer m = q.get_num() * q.get_den();
  Integer square = 1, rest = 1;
  Integer n = m;
  for (Integer f = 2; f * f <= n; ++f) {
    while (n % (f * f) == 0) {
      n /= f * f;
      square *= f;
    }
  }
  rest = n;
  Rational coeff = Rational(square) / Rational(q.get_den());
  coeff.canonicalize();
  if (rest == 1) return {coeff, 0, 0, 0};
  if (rest == 2) return {0, coeff, 0, 0};
  if (rest == 3) return {0, 0, coeff, 0};
  if (rest == 6) return {0, 0, 0, coeff};
  throw Error("square root of " + quadwalk::to_string(q) + " lies outside Q(sqrt2, sqrt3)");
}

RealQuad RealQuad::sqrt() const {
  if (sign() < 0) throw Error("square root of a negative number");
  if (is_rational()) return sqrt_of_rational(a_);
  // try (p + q√k)² = x for k in {2, 3, 6} with rational p, q
  long double approx = to_long_double();
  const std::vector<std::pair<int, Rational>> cands = {{2, b_}, {3, c_}, {6, d_}};
  for (auto [k, coeff] : cands) {
    if (coeff == 0) continue;
    // p² + k q² = a, 2pq = coeff; p² is a root of z² - a z + k coeff²/4
    Rational disc = a_ * a_ - Rational(k) * coeff * coeff;
    if (sgn(disc) < 0) continue;
    RealQuad root;
    try {
      root = sqrt_of_rational(disc);
    } catch (const Error&) {
      continue;
    }
    if (!root.is_rational()) continue;
    for (int s : {1, -1}) {
      Rational p2 = (a_ + s * root.a_) / 2;
      if (sgn(p2) <= 0) continue;
      RealQuad p;
      try {
        p = sqrt_of_rational(p2);
      } catch (const Error&) {
        continue;
      }
      if (!p.is_rational()) continue;
      Rational q = coeff / (2 * p.a_);
      RealQuad cand = p.a_;
      if (k == 2) cand = cand + RealQuad(0, q, 0, 0);
      if (k == 3) cand = cand + RealQuad(0, 0, q, 0);
      if (k == 6) cand = cand + RealQuad(0, 0, 0, q);
      cand = cand.abs();
      if (cand * cand == *this) return cand;
    }
  }
  throw Error("square root of " + to_string() + " (~" + std::to_string(static_cast<double>(approx)) +
              ") lies outside Q(sqrt2, sqrt3)");
}

long double RealQuad::to_long_double() const {
  auto ld = [](const Rational& q) {
    return static_cast<long double>(q.get_num().get_d()) / static_cast<long double>(q.get_den().get_d());
  };
  return ld(a_) + ld(b_) * std::sqrt(2.0L) + ld(c_) * std::sqrt(3.0L) + ld(d_) * std::sqrt(6.0L);
}

std::string RealQuad::to_string() const {
  std::string out;
  bool first = true;
  auto add = [&](const Rational& q, const char* surd) {
    if (q == 0) return;
    out += term_string(q, surd, first);
    first = false;
  };
  add(a_, nullptr);
  add(b_, "2");
  add(c_, "3");
  add(d_, "6");
  return first ? "0" : out;
}

ComplexQuad ComplexQuad::root_of_unity_12(int k) {
  k = ((k % 12) + 12) % 12;
  const Rational half(1, 2);
  const RealQuad h3 = RealQuad(0, 0, half, 0);  // √3/2
  switch (k) {
    case 0: return {1, 0};
    case 1: return {h3, RealQuad(half)};
    case 2: return {RealQuad(half), h3};
    case 3: return {0, 1};
    case 4: return {RealQuad(-half), h3};
    case 5: return {-h3, RealQuad(half)};
    case 6: return {-1, 0};
    case 7: return {-h3, RealQuad(-half)};
    case 8: return {RealQuad(-half), -h3};
    case 9: return {0, -1};
    case 10: return {RealQuad(half), -h3};
    default: return {h3, RealQuad(-half)};
  }
}

RealQuad ComplexQuad::modulus() const {
  if (im_.is_zero()) return re_.abs();
  if (re_.is_zero()) return im_.abs();
  return norm().sqrt();
}

ComplexQuad ComplexQuad::inverse() const {
  if (is_zero()) throw Error("division by zero in Q(sqrt2, sqrt3, i)");
  RealQuad inv = norm().inverse();
  return {re_ * inv, -im_ * inv};
}

ComplexQuad ComplexQuad::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  ComplexQuad result(1), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

int ComplexQuad::phase_order() const {
  if (is_zero()) return 0;
  RealQuad m;
  try {
    m = modulus();
  } catch (const Error&) {
    return 0;
  }
  ComplexQuad unit = *this * ComplexQuad(m.inverse());
  ComplexQuad power = unit;
  for (int k = 1; k <= 24; ++k) {
    if (power == ComplexQuad(1)) return k;
    power = power * unit;
  }
  return 0;
}

std::string ComplexQuad::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im = im_.to_string();
  bool simple_im = im_.is_rational() || (im_.a() == 0 && ((im_.b() != 0) + (im_.c() != 0) + (im_.d() != 0)) == 1);
  std::string im_part;
  if (im_ == RealQuad(1)) im_part = "i";
  else if (im_ == RealQuad(-1)) im_part = "-i";
  else if (simple_im) im_part = im + "*i";
  else im_part = "(" + im + ")*i";
  if (re_.is_zero()) return im_part;
  if (im_part[0] == '-') return re_.to_string() + " - " + im_part.substr(1);
  return re_.to_string() + " + " + im_part;
}

AlgebraicNumber::AlgebraicNumber(ComplexQuad z) : exact(std::move(z)) {
  long double re = exact.re().to_long_double(), im = exact.im().to_long_double();
  approx = {static_cast<double>(re), static_cast<double>(im)};
  error_bound = 4 * std::numeric_limits<double>::epsilon() * (1 + std::abs(approx));
}

}  // namespace quadwalk
