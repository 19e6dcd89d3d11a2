#pragma once

#include "quadwalk/laurent.hpp"
#include "quadwalk/model.hpp"

#include <string>
#include <vector>

namespace quadwalk {

// Power series in t whose coefficients are Laurent polynomials in x, y.
// Coefficient n is supported in |i|, |j| <= n + window.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(int window, std::vector<LaurentPolynomial2> coefficients);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  int window() const { return window_; }
  const LaurentPolynomial2& coefficient(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<LaurentPolynomial2>& coefficients() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.window_ == b.window_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int window_ = 0;
  std::vector<LaurentPolynomial2> coeffs_;
};

struct DenominatorFactor {
  LaurentPolynomial3 poly;  // polynomial in (x, y, t)
  int multiplicity = 1;
  std::string label;        // "kernel", "1-x", "1-y", or "aux"
};

// numerator / prod(factors^multiplicity). The numerator may carry negative
// powers of x, y; (xyt)^origin_shift times it is a polynomial.
struct RationalFunction3 {
  LaurentPolynomial3 numerator;
  std::vector<DenominatorFactor> factors;
  int origin_shift = 0;

  const DenominatorFactor* find(const std::string& label) const;
  // (xyt)^s * numerator.
  LaurentPolynomial3 shifted_numerator() const;
  std::string to_string() const;
};

TruncatedSeries expand_rational(const RationalFunction3& f, int n_max);
TruncatedSeries extract_nonneg(const TruncatedSeries& s);
std::vector<Rational> diagonal(const TruncatedSeries& s);

// Integrand of C(a,b,t) = Δ(xyO(x̄,ȳ) / ((1 - t xy S(x̄,ȳ)) (1-x)^a (1-y)^b)),
// with the factors (1-x), (1-y) cancelled against the numerator when possible.
RationalFunction3 diagonal_representation(const StepSet& s, int a, int b);

// Diagonal sequence d_0..d_{n_max} of a representation.
std::vector<Rational> diagonal_sequence(const RationalFunction3& f, int n_max);

// Coefficients of O(x,y) / (xy (1 - t S(x,y))) up to t^n_max; needs a Laurent orbit sum.
TruncatedSeries orbit_sum_integrand(const StepSet& s, int n_max);

struct LemmaCheck {
  bool holds = true;
  std::string identity;  // which of Q(1,1), Q(0,1), Q(1,0), Q(0,0) failed
  int n = -1;
  Rational lhs, rhs;
};

// Checks [x>=y>=]P evaluated at (1,1), (0,1), (1,0), (0,0) against the diagonals of
// R, (1-x)R, (1-y)R, (1-x)(1-y)R with R = P(x^sx, y^sy, xyt)/((1-x)(1-y)).
// The identity holds for (sx, sy) = (-1, -1); other exponents exist to exercise the check.
LemmaCheck check_lemma_diag(const TruncatedSeries& p, int n_max, std::array<int, 2> substitution = {-1, -1});

}  // namespace quadwalk
