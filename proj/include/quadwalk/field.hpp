#pragma once

#include "quadwalk/rational.hpp"

#include <complex>
#include <string>

namespace quadwalk {

// Element a + b√2 + c√3 + d√6 of Q(√2, √3) with exact sign.
class RealQuad {
 public:
  RealQuad() = default;
  RealQuad(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  RealQuad(int a) : a_(a) {}              // NOLINT(google-explicit-constructor)
  RealQuad(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static RealQuad sqrt2() { return {0, 1, 0, 0}; }
  static RealQuad sqrt3() { return {0, 0, 1, 0}; }
  static RealQuad sqrt6() { return {0, 0, 0, 1}; }
  // √q for rational q >= 0 whose square-free part lies in {1, 2, 3, 6}.
  static RealQuad sqrt_of_rational(const Rational& q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
  int sign() const;
  RealQuad abs() const { return sign() < 0 ? -*this : *this; }
  RealQuad inverse() const;
  // Square root when the result lies in the field (checked by squaring).
  RealQuad sqrt() const;

  friend RealQuad operator+(const RealQuad& x, const RealQuad& y);
  friend RealQuad operator-(const RealQuad& x, const RealQuad& y);
  friend RealQuad operator-(const RealQuad& x);
  friend RealQuad operator*(const RealQuad& x, const RealQuad& y);
  friend RealQuad operator/(const RealQuad& x, const RealQuad& y) { return x * y.inverse(); }
  friend bool operator==(const RealQuad& x, const RealQuad& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator<(const RealQuad& x, const RealQuad& y) { return (x - y).sign() < 0; }

  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }
  std::string to_string() const;

 private:
  Rational a_, b_, c_, d_;
};

// Element of Q(√2, √3, i) = Q(ζ₂₄).
class ComplexQuad {
 public:
  ComplexQuad() = default;
  ComplexQuad(const RealQuad& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ComplexQuad(const Rational& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ComplexQuad(int re) : re_(re) {}              // NOLINT(google-explicit-constructor)
  ComplexQuad(RealQuad re, RealQuad im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexQuad i() { return {RealQuad(0), RealQuad(1)}; }
  // e^{2πi k/12}.
  static ComplexQuad root_of_unity_12(int k);

  const RealQuad& re() const { return re_; }
  const RealQuad& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  ComplexQuad conj() const { return {re_, -im_}; }
  RealQuad norm() const { return re_ * re_ + im_ * im_; }  // |z|²
  // |z|, exact when it lies in Q(√2,√3); throws otherwise.
  RealQuad modulus() const;
  ComplexQuad inverse() const;
  ComplexQuad pow(int k) const;
  // Smallest k in 1..24 with (z/|z|)^k = 1, or 0 if none.
  int phase_order() const;

  friend ComplexQuad operator+(const ComplexQuad& x, const ComplexQuad& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
  friend ComplexQuad operator-(const ComplexQuad& x, const ComplexQuad& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
  friend ComplexQuad operator-(const ComplexQuad& x) { return {-x.re_, -x.im_}; }
  friend ComplexQuad operator*(const ComplexQuad& x, const ComplexQuad& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend ComplexQuad operator/(const ComplexQuad& x, const ComplexQuad& y) { return x * y.inverse(); }
  friend bool operator==(const ComplexQuad& x, const ComplexQuad& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string to_string() const;

 private:
  RealQuad re_, im_;
};

// Exact algebraic number with a floating approximation and error bound.
struct AlgebraicNumber {
  ComplexQuad exact;
  std::complex<double> approx;
  double error_bound = 0;

  AlgebraicNumber() = default;
  AlgebraicNumber(ComplexQuad z);  // NOLINT(google-explicit-constructor)
  std::string to_string() const { return exact.to_string(); }
};

}  // namespace quadwalk
