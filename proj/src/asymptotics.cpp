#include "quadwalk/asymptotics.hpp"

#include "quadwalk/errors.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace quadwalk {

namespace {

using CF = ClosedForm;

LaurentPolynomial2 kernel_step_polynomial(const RationalFunction3& f) {
  const DenominatorFactor* k = f.find("kernel");
  if (k == nullptr) throw DegenerateGeometry("integrand has no kernel factor");
  if (k->multiplicity != 1) throw DegenerateGeometry("kernel factor is not simple");
  LaurentPolynomial2 p;
  for (const auto& [e, c] : k->poly.terms()) {
    if (e[2] == 1) p.add_term({e[0], e[1]}, -c);
  }
  return p;
}

// numerator over the denominator factors other than those listed
ComplexQuad amplitude(const RationalFunction3& f, const Point3& at, const std::vector<std::string>& active) {
  ComplexQuad num = evaluate(f.numerator, at);
  ComplexQuad den(1);
  for (const auto& factor : f.factors) {
    if (std::find(active.begin(), active.end(), factor.label) != active.end()) continue;
    ComplexQuad v = evaluate(factor.poly, at);
    if (v.is_zero()) throw DegenerateGeometry("factor " + factor.label + " vanishes at the point");
    den = den * v.pow(factor.multiplicity);
  }
  return num / den;
}

ComplexQuad unit_phase(const CriticalPoint& p) {
  ComplexQuad g = p.growth();
  return g * ComplexQuad(g.modulus().inverse());
}

std::complex<double> phase_power(const ComplexQuad& w, long long r) { return std::pow(w.to_complex(), static_cast<double>(r)); }

bool close(std::complex<double> a, std::complex<double> b, double scale) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, scale);
}

ComputedAsymptotics combine(std::vector<PointContribution> contributions, std::vector<std::string> skipped,
                            Rational alpha, TermSource source) {
  if (contributions.empty()) throw VanishingAmplitude("every contributing point has vanishing amplitude");
  ComputedAsymptotics out;
  RealQuad rho = contributions.front().point.growth().modulus();
  int period = 1;
  for (const auto& c : contributions) {
    if (!(c.point.growth().modulus() == rho)) throw DegenerateGeometry("contributing points differ in growth modulus");
    int order = c.phase.phase_order();
    if (order == 0) throw DegenerateGeometry("growth phase is not a root of unity");
    period = std::lcm(period, order);
  }
  std::vector<std::complex<double>> kappa(static_cast<std::size_t>(period));
  double scale = 0;
  bool exact = true;
  for (const auto& c : contributions) {
    scale = std::max(scale, std::abs(c.kappa));
    exact = exact && c.exact.has_value() && c.phase.is_real();
  }
  for (int r = 0; r < period; ++r) {
    for (const auto& c : contributions) kappa[static_cast<std::size_t>(r)] += c.kappa * phase_power(c.phase, r);
  }
  // smallest period consistent with the sums
  int reduced = period;
  for (int d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    bool ok = true;
    for (int r = 0; r < period && ok; ++r) ok = close(kappa[static_cast<std::size_t>(r)], kappa[static_cast<std::size_t>(r % d)], scale);
    if (ok) {
      reduced = d;
      break;
    }
  }
  AsymptoticTerm& term = out.term;
  term.rho = rho;
  term.alpha = alpha;
  term.period = reduced;
  term.source = source;
  for (int r = 0; r < reduced; ++r) {
    std::complex<double> k = kappa[static_cast<std::size_t>(r)];
    if (std::abs(k.imag()) > 1e-9 * std::max(1.0, scale)) throw DegenerateGeometry("per-residue constant is not real");
    if (exact) {
      std::optional<CF> sum;
      for (const auto& c : contributions) {
        CF part = *c.exact;
        if (c.phase.re().sign() < 0 && r % 2 == 1) part = -part;
        sum = sum ? *sum + part : part;
      }
      Constant constant(*sum);
      term.kappa.push_back(constant);
    } else {
      term.kappa.push_back(Constant::numeric(k.real()));
    }
  }
  out.points = std::move(contributions);
  out.skipped = std::move(skipped);
  return out;
}

template <class PerPoint>
ComputedAsymptotics sum_points(const RationalFunction3& f, const std::vector<CriticalPoint>& points, PerPoint per_point,
                               Rational alpha, TermSource source) {
  std::vector<PointContribution> contributions;
  std::vector<std::string> skipped;
  for (const auto& p : points) {
    try {
      contributions.push_back(per_point(f, p));
    } catch (const VanishingAmplitude&) {
      skipped.push_back(p.name);
    }
  }
  return combine(std::move(contributions), std::move(skipped), std::move(alpha), source);
}

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

}  // namespace

std::string to_string(TermSource s) {
  switch (s) {
    case TermSource::TableEncoded: return "table-encoded";
    case TermSource::SmoothComputed: return "smooth-computed";
    case TermSource::StratumComputed: return "stratum-computed";
  }
  return "?";
}

std::string Constant::to_string() const { return exact ? exact->to_string() : format_double(value); }

std::string AsymptoticTerm::to_string() const {
  std::ostringstream out;
  if (period == 1) {
    out << kappa[0].to_string();
  } else {
    out << "[";
    for (int r = 0; r < period; ++r) out << (r ? "; " : "") << "n=" << r << " mod " << period << ": " << kappa[r].to_string();
    out << "]";
  }
  out << " * (" << rho.to_string() << ")^n * n^(" << quadwalk::to_string(alpha) << ")";
  return out.str();
}

AsymptoticTerm predicted_asymptotics(const StepSet& s, Flavor flavor) {
  ModelClass cls = classify(s);
  if (cls.kind == ModelKind::InfiniteGroup || cls.kind == ModelKind::HalfplaneReducible) {
    throw ClassMismatch(s.to_string() + " is " + to_string(cls.kind) + "; only the 23 finite-group models are tabulated");
  }
  Canonical oriented = analysis_orientation(s);
  Flavor f = oriented.swapped ? swap_flavor(flavor) : flavor;
  return table_term(cls.model_id, f);
}

PointContribution smooth_point_contribution(const RationalFunction3& f, const CriticalPoint& p) {
  const Point3 at = p.point();
  LaurentPolynomial2 poly = kernel_step_polynomial(f);
  const ComplexQuad &x = at[0], &y = at[1];
  auto ev = [&](const LaurentPolynomial2& q) { return evaluate(q, x, y); };
  ComplexQuad pv = ev(poly);
  if (!(at[2] * pv == ComplexQuad(1))) throw DegenerateGeometry(p.name + " is not on the kernel");
  ComplexQuad g = amplitude(f, at, {"kernel"});
  if (g.is_zero()) throw VanishingAmplitude("numerator vanishes at " + p.name);

  LaurentPolynomial2 px = poly.derivative(0), py = poly.derivative(1);
  ComplexQuad xpx = x * ev(px), ypy = y * ev(py);
  ComplexQuad x2pxx = x * x * ev(px.derivative(0)), y2pyy = y * y * ev(py.derivative(1));
  ComplexQuad xypxy = x * y * ev(px.derivative(1));
  ComplexQuad inv = pv.inverse();
  ComplexQuad huu = (xpx + x2pxx) * inv - xpx * xpx * inv * inv;
  ComplexQuad hvv = (ypy + y2pyy) * inv - ypy * ypy * inv * inv;
  ComplexQuad huv = xypxy * inv - xpx * ypy * inv * inv;
  ComplexQuad det = huu * hvv - huv * huv;
  if (det.is_zero()) throw DegenerateGeometry("degenerate Hessian at " + p.name);

  PointContribution out;
  out.point = p;
  out.phase = unit_phase(p);
  out.kappa = g.to_complex() / (2 * std::numbers::pi * std::sqrt(det.to_complex()));
  if (g.is_real() && det.is_real() && det.re().sign() > 0) {
    try {
      out.exact = CF(g.re() / (RealQuad(2) * det.re().sqrt())) / CF::pi();
    } catch (const Error&) {
      out.exact = CF(g.re()) / (CF(2) * CF::pi() * CF::sqrt(CF(det.re())));
    }
  }
  return out;
}

PointContribution stratum_point_contribution(const RationalFunction3& f, const CriticalPoint& p) {
  const Point3 at = p.point();
  if (!(at[1] == ComplexQuad(1))) throw DegenerateGeometry(p.name + " is not on 1-y");
  const DenominatorFactor* line = f.find("1-y");
  if (line == nullptr || line->multiplicity != 1) throw DegenerateGeometry("integrand has no simple factor 1-y");
  LaurentPolynomial2 poly = kernel_step_polynomial(f);
  const ComplexQuad& x = at[0];
  auto ev = [&](const LaurentPolynomial2& q) { return evaluate(q, x, ComplexQuad(1)); };
  ComplexQuad pv = ev(poly);
  if (!(at[2] * pv == ComplexQuad(1))) throw DegenerateGeometry(p.name + " is not on the kernel");
  ComplexQuad g = amplitude(f, at, {"kernel", "1-y"});
  if (g.is_zero()) throw VanishingAmplitude("residue numerator vanishes at " + p.name);

  LaurentPolynomial2 px = poly.derivative(0);
  ComplexQuad xpx = x * ev(px), x2pxx = x * x * ev(px.derivative(0));
  ComplexQuad inv = pv.inverse();
  if (!(xpx * inv == ComplexQuad(1))) throw DegenerateGeometry(p.name + " is not critical on the stratum");
  ComplexQuad second = (xpx + x2pxx) * inv - xpx * xpx * inv * inv;
  if (second.is_zero()) throw DegenerateGeometry("degenerate second derivative at " + p.name);

  PointContribution out;
  out.point = p;
  out.phase = unit_phase(p);
  out.kappa = g.to_complex() / std::sqrt(2 * std::numbers::pi * second.to_complex());
  if (g.is_real() && second.is_real() && second.re().sign() > 0) {
    try {
      out.exact = CF(g.re() / second.re().sqrt()) / CF::sqrt(CF(2) * CF::pi());
    } catch (const Error&) {
      out.exact = CF(g.re()) / CF::sqrt(CF(2) * CF::pi() * CF(second.re()));
    }
  }
  return out;
}

ComputedAsymptotics smooth_contribution(const RationalFunction3& f, const std::vector<CriticalPoint>& points) {
  return sum_points(f, points, smooth_point_contribution, Rational(-1), TermSource::SmoothComputed);
}

ComputedAsymptotics stratum_contribution(const RationalFunction3& f, const std::vector<CriticalPoint>& points) {
  return sum_points(f, points, stratum_point_contribution, Rational(-1, 2), TermSource::StratumComputed);
}

ComputedAsymptotics smooth_contribution(const RationalFunction3& f, const CriticalPoint& p) {
  return combine({smooth_point_contribution(f, p)}, {}, Rational(-1), TermSource::SmoothComputed);
}

ComputedAsymptotics stratum_contribution(const RationalFunction3& f, const CriticalPoint& p) {
  return combine({stratum_point_contribution(f, p)}, {}, Rational(-1, 2), TermSource::StratumComputed);
}

ComputedAsymptotics computed_asymptotics(const StepSet& s) {
  ModelClass cls = classify(s);
  Canonical oriented = analysis_orientation(s);
  RationalFunction3 f = diagonal_representation(oriented.steps, 1, 1);
  ComputedAsymptotics out;
  if (cls.kind == ModelKind::HighlySymmetric) {
    out = smooth_contribution(f, contributing_set(oriented.steps));
  } else if (cls.kind == ModelKind::PositiveDrift) {
    out = stratum_contribution(f, contributing_set(oriented.steps));
  } else {
    throw ClassMismatch("leading terms are computed for highly symmetric and positive drift models only; " +
                        s.to_string() + " is " + to_string(cls.kind));
  }
  out.term.row = "anywhere:" + std::to_string(cls.model_id);
  return out;
}

std::vector<PointConstant> decompose_over_points(const AsymptoticTerm& term, const std::vector<CriticalPoint>& points) {
  std::vector<ComplexQuad> phases;
  int period = term.period;
  for (const auto& p : points) {
    ComplexQuad w = unit_phase(p);
    if (!(p.growth().modulus() == term.rho)) throw DegenerateGeometry(p.name + " does not have growth rho");
    for (const auto& other : phases) {
      if (other == w) throw DegenerateGeometry("points share a growth phase and cannot be separated");
    }
    int order = w.phase_order();
    if (order == 0) throw DegenerateGeometry("growth phase is not a root of unity");
    period = std::lcm(period, order);
    phases.push_back(w);
  }
  std::vector<PointConstant> out;
  bool exact_all = true;
  for (const auto& k : term.kappa) exact_all = exact_all && k.exact.has_value();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ComplexQuad& w = phases[i];
    ComplexQuad w_inv = w.inverse();
    std::vector<ComplexQuad> weight(static_cast<std::size_t>(term.period));
    for (int j = 0; j < period; ++j) {
      auto& c = weight[static_cast<std::size_t>(j % term.period)];
      c = c + w_inv.pow(j) * ComplexQuad(Rational(1, period));
    }
    PointConstant pc;
    pc.point = points[i];
    bool real = true;
    std::optional<CF> exact;
    for (int r = 0; r < term.period; ++r) {
      const ComplexQuad& c = weight[static_cast<std::size_t>(r)];
      pc.kappa += c.to_complex() * term.kappa[static_cast<std::size_t>(r)].value;
      real = real && c.is_real();
      if (exact_all && c.is_real() && !c.is_zero()) {
        CF part = CF(c.re()) * *term.kappa[static_cast<std::size_t>(r)].exact;
        exact = exact ? *exact + part : part;
      }
    }
    if (exact_all && real) pc.exact = exact ? *exact : CF(0);
    out.push_back(pc);
  }
  // the phases must reproduce every residue
  for (int r = 0; r < period; ++r) {
    std::complex<double> sum = 0;
    for (std::size_t i = 0; i < out.size(); ++i) sum += out[i].kappa * phase_power(phases[i], r);
    double target = term.kappa[static_cast<std::size_t>(r % term.period)].value;
    if (std::abs(sum - target) > 1e-9 * std::max(1.0, std::abs(target))) {
      throw DegenerateGeometry("term is not a combination of the given growth phases");
    }
  }
  return out;
}

double LogValue::value() const { return zero ? 0.0 : sign * std::exp(log_abs); }

LogValue evaluate(const AsymptoticTerm& term, long long n) {
  LogValue v;
  double k = term.kappa_at(n).value;
  if (k == 0) {
    v.zero = true;
    return v;
  }
  v.sign = k < 0 ? -1 : 1;
  v.log_abs = std::log(std::abs(k)) + static_cast<double>(n) * std::log(term.rho_value()) +
              term.alpha_value() * std::log(static_cast<double>(n));
  return v;
}

double evaluate_scaled(const AsymptoticTerm& term, long long n, double rho0) {
  double k = term.kappa_at(n).value;
  if (k == 0) return 0;
  double nn = static_cast<double>(n);
  return k * std::exp(nn * (std::log(term.rho_value()) - std::log(rho0)) + term.alpha_value() * std::log(nn));
}

}  // namespace quadwalk
