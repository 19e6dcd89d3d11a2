#pragma once

#include "quadwalk/field.hpp"
#include "quadwalk/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <memory>
#include <string>

namespace quadwalk {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

// Exact real constant built from rationals, π, Γ(1/4), Γ(1/3), square
// roots and rational powers.
class ClosedForm {
 public:
  enum class Kind { Number, Pi, Gamma, Add, Sub, Mul, Div, Neg, Pow };

  ClosedForm() : ClosedForm(Rational(0)) {}
  ClosedForm(const Rational& q);  // NOLINT(google-explicit-constructor)
  ClosedForm(int q) : ClosedForm(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  ClosedForm(const RealQuad& q);  // NOLINT(google-explicit-constructor)

  static ClosedForm pi();
  // Γ(1/4) or Γ(1/3).
  static ClosedForm gamma(const Rational& arg);
  static ClosedForm sqrt(const ClosedForm& x) { return pow(x, Rational(1, 2)); }
  static ClosedForm pow(const ClosedForm& x, const Rational& e);

  friend ClosedForm operator+(const ClosedForm& x, const ClosedForm& y);
  friend ClosedForm operator-(const ClosedForm& x, const ClosedForm& y);
  friend ClosedForm operator*(const ClosedForm& x, const ClosedForm& y);
  friend ClosedForm operator/(const ClosedForm& x, const ClosedForm& y);
  friend ClosedForm operator-(const ClosedForm& x);

  Kind kind() const;
  bool is_zero() const;
  HighFloat evaluate() const;
  double value() const { return static_cast<double>(evaluate()); }
  std::string to_string() const;

  struct Node;

 private:
  explicit ClosedForm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace quadwalk
