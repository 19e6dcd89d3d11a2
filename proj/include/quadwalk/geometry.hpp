#pragma once

#include "quadwalk/field.hpp"
#include "quadwalk/model.hpp"
#include "quadwalk/series.hpp"

#include <array>
#include <string>
#include <vector>

namespace quadwalk {

using Point3 = std::array<ComplexQuad, 3>;

struct CriticalPoint {
  std::string name;
  std::array<AlgebraicNumber, 3> coords;
  std::vector<std::string> stratum;  // labels of the vanishing denominator factors
  bool minimal = false;
  bool contributing = false;
  int rank = 0;               // 0: dominant, 1: lower order
  bool cone_interior = false; // (1,1,1) strictly inside the cone of lognormals

  Point3 point() const { return {coords[0].exact, coords[1].exact, coords[2].exact}; }
  bool smooth() const { return stratum.size() == 1; }
  // 1/(xyt)
  ComplexQuad growth() const;
  std::string to_string() const;
};

// Outward lognormals -∇_log H_k of the active factors.
struct StratumGeometry {
  std::vector<Point3> lognormals;
};

StratumGeometry stratum_geometry(const RationalFunction3& f, const Point3& p);

// Coefficients a_k with Σ a_k v_k = (1,1,1), or empty when (1,1,1) is not in
// the span. Throws DegenerateGeometry for dependent lognormals.
std::vector<ComplexQuad> cone_coefficients(const StratumGeometry& g);
// (1,1,1) in the closed cone spanned by the lognormals with non-negative real weights.
bool dual_cone_contains_one(const StratumGeometry& g);

struct MinimalityCertificate {
  bool certified = false;            // exact segment check passed
  std::vector<std::string> blocking; // factors with a zero on the open segment
  double sampled_margin = 0;         // min |H_k| over the sampled tori
  bool sampled_ok = false;
  std::string note = "torus sampling is evidence, not proof";
};

MinimalityCertificate certify_minimality(const CriticalPoint& p, const RationalFunction3& f, int grid = 12);

// xyS(x̄,ȳ), so that the kernel factor reads 1 - t P(x,y).
LaurentPolynomial2 kernel_polynomial(const StepSet& s);

// Critical points of the anywhere integrand, in the orientation of s.
std::vector<CriticalPoint> critical_points(const StepSet& s);
std::vector<CriticalPoint> contributing_set(const StepSet& s);

// Number of distinct real roots in the open interval (0, 1) of the polynomial
// with the given coefficients (constant term first).
int count_roots_open_unit(const std::vector<RealQuad>& coeffs);

ComplexQuad evaluate(const LaurentPolynomial3& p, const Point3& at);
ComplexQuad evaluate(const LaurentPolynomial2& p, const ComplexQuad& x, const ComplexQuad& y);

}  // namespace quadwalk
