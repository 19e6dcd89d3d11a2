#pragma once

#include "quadwalk/laurent.hpp"

#include <string>
#include <vector>

namespace quadwalk {

// Dense univariate polynomial over Q, index = degree; no trailing zeros.
using UPoly = std::vector<Rational>;
// Dense polynomial in Q[x][y]: entry k is the coefficient of y^k.
using BiPoly = std::vector<UPoly>;

namespace upoly {
void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for zero
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rational& c);
// Quotient and remainder; throws on division by zero.
void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly monic_gcd(const UPoly& a, const UPoly& b);
}  // namespace upoly

namespace bipoly {
void trim(BiPoly& p);
bool is_zero(const BiPoly& p);
int degree_y(const BiPoly& p);
int degree_x(const BiPoly& p);
BiPoly add(const BiPoly& a, const BiPoly& b);
BiPoly sub(const BiPoly& a, const BiPoly& b);
BiPoly mul(const BiPoly& a, const BiPoly& b);
BiPoly mul(const BiPoly& a, const UPoly& c);
BiPoly power(const BiPoly& a, int k);
// Exact quotient; throws std::domain_error if b does not divide a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
BiPoly exact_div(const BiPoly& a, const UPoly& c);
UPoly content(const BiPoly& a);
BiPoly primitive_part(const BiPoly& a);
BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b);
// Greatest common divisor, normalized so the leading coefficient (highest y,
// then highest x) is 1.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
Rational leading_coefficient(const BiPoly& a);

BiPoly from_polynomial(const LaurentPolynomial2& p);  // requires nonnegative exponents
LaurentPolynomial2 to_polynomial(const BiPoly& p);
}  // namespace bipoly

// Reduced quotient of bivariate polynomials, canonical: numerator and
// denominator coprime polynomials (no negative exponents) and the
// lexicographically leading denominator coefficient equal to 1.
class RationalExpr2 {
 public:
  RationalExpr2() : RationalExpr2(LaurentPolynomial2(0)) {}
  RationalExpr2(const LaurentPolynomial2& numerator,  // NOLINT(google-explicit-constructor)
                const LaurentPolynomial2& denominator = LaurentPolynomial2(1));

  const LaurentPolynomial2& numerator() const { return num_; }
  const LaurentPolynomial2& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // Largest x- or y-degree appearing in numerator or denominator.
  int degree() const;

  // Laurent polynomial when the denominator is a monomial.
  bool is_laurent() const;
  LaurentPolynomial2 as_laurent() const;

  friend RationalExpr2 operator+(const RationalExpr2& a, const RationalExpr2& b);
  friend RationalExpr2 operator-(const RationalExpr2& a, const RationalExpr2& b);
  friend RationalExpr2 operator*(const RationalExpr2& a, const RationalExpr2& b);
  friend RationalExpr2 operator/(const RationalExpr2& a, const RationalExpr2& b);
  friend RationalExpr2 operator-(const RationalExpr2& a);
  friend bool operator==(const RationalExpr2& a, const RationalExpr2& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // f(x̄, ȳ).
  RationalExpr2 inverted() const;

  std::string to_string() const;

 private:
  struct Raw {};
  RationalExpr2(Raw, LaurentPolynomial2 num, LaurentPolynomial2 den) : num_(std::move(num)), den_(std::move(den)) {}
  LaurentPolynomial2 num_, den_;
  friend RationalExpr2 make_reduced(const BiPoly& num, const BiPoly& den);
};

RationalExpr2 make_reduced(const BiPoly& num, const BiPoly& den);

}  // namespace quadwalk
