#pragma once

#include "quadwalk/closed_form.hpp"
#include "quadwalk/enumeration.hpp"
#include "quadwalk/field.hpp"
#include "quadwalk/geometry.hpp"
#include "quadwalk/model.hpp"
#include "quadwalk/series.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace quadwalk {

enum class TermSource { TableEncoded, SmoothComputed, StratumComputed };
std::string to_string(TermSource s);

struct Constant {
  std::optional<ClosedForm> exact;
  double value = 0;

  Constant() = default;
  Constant(const ClosedForm& c) : exact(c), value(c.value()) {}  // NOLINT(google-explicit-constructor)
  static Constant numeric(double v) {
    Constant c;
    c.value = v;
    return c;
  }
  std::string to_string() const;
};

// kappa_{n mod period} * rho^n * n^alpha
struct AsymptoticTerm {
  RealQuad rho;
  Rational alpha;
  int period = 1;
  std::vector<Constant> kappa;
  TermSource source = TermSource::TableEncoded;
  std::string row;  // row tag such as "anywhere:17" or "boundary:9:origin"

  double rho_value() const { return rho.to_double(); }
  double alpha_value() const { return alpha.get_d(); }
  const Constant& kappa_at(long long n) const { return kappa[static_cast<std::size_t>(n % period)]; }
  std::string to_string() const;
};

// Encoded rows for catalog ids 1..23 in table orientation.
AsymptoticTerm table_term(int model_id, Flavor flavor);

// Handles the x/y swap relative to the table orientation.
AsymptoticTerm predicted_asymptotics(const StepSet& s, Flavor flavor);

struct PointContribution {
  CriticalPoint point;
  std::complex<double> kappa;
  std::optional<ClosedForm> exact;  // when kappa is real with an exact form
  ComplexQuad phase;                // growth / |growth|
};

struct ComputedAsymptotics {
  AsymptoticTerm term;
  std::vector<PointContribution> points;
  std::vector<std::string> skipped;  // points with vanishing amplitude
};

// Leading term at one smooth point of the kernel; throws VanishingAmplitude.
PointContribution smooth_point_contribution(const RationalFunction3& f, const CriticalPoint& p);
// Leading term at one transverse point of the kernel and 1-y.
PointContribution stratum_point_contribution(const RationalFunction3& f, const CriticalPoint& p);

// Sums over the points, skipping those with vanishing amplitude; at least one must remain.
ComputedAsymptotics smooth_contribution(const RationalFunction3& f, const std::vector<CriticalPoint>& points);
ComputedAsymptotics stratum_contribution(const RationalFunction3& f, const std::vector<CriticalPoint>& points);
ComputedAsymptotics smooth_contribution(const RationalFunction3& f, const CriticalPoint& p);
ComputedAsymptotics stratum_contribution(const RationalFunction3& f, const CriticalPoint& p);

// Anywhere-flavor computation from the contributing set (highly symmetric: smooth;
// positive drift: stratum). Throws ClassMismatch for other classes.
ComputedAsymptotics computed_asymptotics(const StepSet& s);

struct PointConstant {
  CriticalPoint point;
  std::complex<double> kappa;
  std::optional<ClosedForm> exact;
};

// Splits the per-residue constants of a term over the growth phases of the
// points: kappa_r = sum_p kappa_p * phase_p^r.
std::vector<PointConstant> decompose_over_points(const AsymptoticTerm& term, const std::vector<CriticalPoint>& points);

struct LogValue {
  bool zero = false;
  int sign = 1;
  double log_abs = 0;
  double value() const;
};

LogValue evaluate(const AsymptoticTerm& term, long long n);
// term(n) / rho0^n
double evaluate_scaled(const AsymptoticTerm& term, long long n, double rho0);

}  // namespace quadwalk
