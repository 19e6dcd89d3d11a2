#include "quadwalk/verifier.hpp"

#include "quadwalk/errors.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace quadwalk {

namespace {

double neville_at_zero(std::vector<double> h, std::vector<double> y) {
  const std::size_t n = h.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) y[i] = (h[i + k] * y[i] - h[i] * y[i + 1]) / (h[i + k] - h[i]);
  }
  return y[0];
}

std::vector<int> nodes(int n_max, int residue, int q, int m, double low) {
  std::vector<int> out;
  for (int j = 0; j <= m; ++j) {
    int n = static_cast<int>(n_max * (low + (1 - low) * j / m));
    n -= ((n - residue) % q + q) % q;
    out.push_back(n);
  }
  return out;
}

// f(n) is expanded in h = (n + shift)^-power.
template <class F>
double richardson(F f, int n_max, int residue, int q, int m, double low, double power, double shift = 0) {
  std::vector<double> h, y;
  for (int n : nodes(n_max, residue, q, m, low)) {
    h.push_back(std::pow(n + shift, -power));
    y.push_back(f(n));
  }
  return neville_at_zero(h, y);
}

struct Raw {
  double log_rho = 0, alpha = 0;
  std::vector<double> kappa;
  std::vector<bool> zero;
  bool ok = true;
};

Raw estimate_once(const std::vector<double>& c, int period, int q, int m, double low, double power) {
  const int n_max = static_cast<int>(c.size()) - 1;
  Raw raw;
  std::vector<int> live;
  const int start = static_cast<int>(low * n_max) - q;
  for (int r = 0; r < q; ++r) {
    bool any = false;
    for (int n = r; n <= n_max; n += q) any = any || (n >= start && c[static_cast<std::size_t>(n)] != 0);
    if (any) live.push_back(r);
  }
  if (live.empty()) {
    raw.ok = false;
    return raw;
  }
  auto L = [&](int n) {
    double v = c[static_cast<std::size_t>(n)];
    if (!(v > 0)) raw.ok = false;
    return std::log(v);
  };
  auto d2 = [q](int n) { return std::log(n + q) - 2 * std::log(n) + std::log(n - q); };
  for (int r : live) {
    double lr = richardson([&](int n) { return (L(n + q) - L(n)) / q; }, n_max - q, r, q, m, low, power, q / 2.0);
    double a = richardson([&](int n) { return (L(n + q) - 2 * L(n) + L(n - q)) / d2(n); }, n_max - q, r, q, m, low, power);
    raw.log_rho += lr;
    raw.alpha += a;
  }
  raw.log_rho /= static_cast<double>(live.size());
  raw.alpha /= static_cast<double>(live.size());
  std::vector<double> sum(static_cast<std::size_t>(period), 0.0);
  std::vector<int> count(static_cast<std::size_t>(period), 0), live_count(static_cast<std::size_t>(period), 0);
  for (int r = 0; r < q; ++r) {
    auto slot = static_cast<std::size_t>(r % period);
    ++count[slot];
    if (std::find(live.begin(), live.end(), r) == live.end()) continue;
    ++live_count[slot];
    double lk = richardson([&](int n) { return L(n) - n * raw.log_rho - raw.alpha * std::log(n); }, n_max, r, q, m, low,
                           power);
    sum[slot] += std::exp(lk);
  }
  for (int p = 0; p < period; ++p) {
    raw.kappa.push_back(sum[static_cast<std::size_t>(p)] / count[static_cast<std::size_t>(p)]);
    raw.zero.push_back(live_count[static_cast<std::size_t>(p)] == 0);
  }
  if (!std::isfinite(raw.log_rho) || !std::isfinite(raw.alpha)) raw.ok = false;
  for (double k : raw.kappa) raw.ok = raw.ok && std::isfinite(k);
  return raw;
}

double rel_gap(double a, double b) {
  double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0 ? 0 : std::abs(a - b) / scale;
}

}  // namespace

GrowthEstimate estimate_growth(const std::vector<double>& c, double rho0, int period, const EstimateOptions& options) {
  const int m = options.order, q = options.classes;
  if (m < 2) throw std::invalid_argument("extrapolation order must be at least 2");
  if (q % period != 0) throw std::invalid_argument("period must divide the number of residue classes");
  if (static_cast<int>(c.size()) < 16 * period * m || static_cast<int>(c.size()) < 16 * q) {
    throw std::invalid_argument("sequence too short for the requested order");
  }
  Raw hi = estimate_once(c, period, q, m, options.low, options.power);
  Raw lo = estimate_once(c, period, q, m - 1, options.low, options.power);
  GrowthEstimate e;
  e.rho = std::exp(hi.log_rho) * rho0;
  e.alpha = hi.alpha;
  e.kappa = hi.kappa;
  e.zero_class = hi.zero;
  e.n_min = static_cast<int>(options.low * (static_cast<int>(c.size()) - 1)) - q;
  e.n_max = static_cast<int>(c.size()) - 1;
  e.order = m;
  e.power = options.power;
  e.rho_gap = std::abs(std::exp(hi.log_rho) - std::exp(lo.log_rho)) * rho0;
  e.alpha_gap = std::abs(hi.alpha - lo.alpha);
  for (std::size_t p = 0; p < hi.kappa.size(); ++p) e.kappa_gap.push_back(rel_gap(hi.kappa[p], lo.kappa.at(p)));
  e.converged = hi.ok && lo.ok;
  std::ostringstream d;
  d << "order " << m << " vs " << (m - 1) << ", h = n^-" << options.power << ": rho gap " << e.rho_gap << ", alpha gap "
    << e.alpha_gap;
  if (!e.converged) d << "; non-positive or non-finite values in a live residue class";
  e.diagnostics = d.str();
  return e;
}

GrowthEstimate estimate_growth_auto(const std::vector<double>& c, double rho0, int period) {
  static const std::pair<double, int> candidates[] = {{1.0, 3}, {1.0, 5}, {0.5, 6}, {0.5, 8}};
  std::optional<GrowthEstimate> best;
  double best_gap = 0;
  for (auto [power, order] : candidates) {
    EstimateOptions opt;
    opt.power = power;
    opt.order = order;
    GrowthEstimate e;
    try {
      e = estimate_growth(c, rho0, period, opt);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!e.converged) continue;
    double gap = e.alpha_gap;
    for (double g : e.kappa_gap) gap = std::max(gap, g);
    if (!best || gap < best_gap) {
      best = e;
      best_gap = gap;
    }
  }
  if (!best) {
    EstimateOptions opt;
    return estimate_growth(c, rho0, period, opt);
  }
  return *best;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Tolerances default_tolerances(int model_id, Flavor flavor, const AsymptoticTerm& term) {
  Tolerances t;
  if (flavor == Flavor::Anywhere) {
    t.kappa_rel = (model_id >= 5 && model_id <= 8) ? 0.02 : 0.01;
  } else if (term.alpha >= Rational(-3)) {
    t.kappa_rel = 0.02;
  } else {
    t.kappa_rel = 0.10;
    t.loose = true;
  }
  return t;
}

int default_length(const AsymptoticTerm& term) { return term.alpha < Rational(-3) ? 5000 : 3000; }

VerificationReport compare(const StepSet& s, int model_id, Flavor flavor, const AsymptoticTerm& predicted,
                           const GrowthEstimate& estimate, const Tolerances& tol, int n_used) {
  VerificationReport rep;
  rep.model_id = model_id;
  rep.steps = s;
  rep.flavor = flavor;
  rep.predicted = predicted;
  rep.estimated = estimate;
  rep.tolerances = tol;
  rep.n_used = n_used;
  if (!estimate.converged) {
    rep.verdict = Verdict::Inconclusive;
    rep.failures.push_back("extrapolation did not converge: " + estimate.diagnostics);
    return rep;
  }
  std::ostringstream msg;
  double rho = predicted.rho_value();
  if (std::abs(estimate.rho / rho - 1) > tol.rho_ratio) {
    msg.str("");
    msg << "rho ratio " << estimate.rho / rho << " outside 1 +- " << tol.rho_ratio;
    rep.failures.push_back(msg.str());
  }
  if (std::abs(estimate.alpha - predicted.alpha_value()) > tol.alpha_abs) {
    msg.str("");
    msg << "alpha " << estimate.alpha << " vs " << predicted.alpha_value();
    rep.failures.push_back(msg.str());
  }
  for (int r = 0; r < predicted.period; ++r) {
    double want = predicted.kappa[static_cast<std::size_t>(r)].value;
    double got = estimate.kappa.at(static_cast<std::size_t>(r));
    msg.str("");
    if (want == 0) {
      if (!estimate.zero_class.at(static_cast<std::size_t>(r))) {
        msg << "residue " << r << " should vanish identically, estimate " << got;
        rep.failures.push_back(msg.str());
      }
    } else if (std::abs(got / want - 1) > tol.kappa_rel) {
      msg << "kappa[" << r << "] " << got << " vs " << want << " (relative error " << got / want - 1 << ")";
      rep.failures.push_back(msg.str());
    }
  }
  rep.verdict = rep.failures.empty() ? Verdict::Pass : Verdict::Fail;
  return rep;
}

VerificationReport verify_model(const StepSet& s, Flavor flavor, int n, std::optional<Tolerances> tol) {
  auto start = std::chrono::steady_clock::now();
  AsymptoticTerm predicted = predicted_asymptotics(s, flavor);
  int model_id = classify(s).model_id;
  if (n <= 0) n = default_length(predicted);
  Tolerances t = tol ? *tol : default_tolerances(model_id, flavor, predicted);
  CountOptions opt;
  opt.max_scaled_n = std::max(opt.max_scaled_n, n);
  opt.keep_grids = false;
  ScaledCounts counts = count_scaled(s, n, predicted.rho_value(), opt);
  GrowthEstimate e = estimate_growth_auto(select(counts.sequences, flavor), predicted.rho_value(), predicted.period);
  VerificationReport rep = compare(s, model_id, flavor, predicted, e, t, n);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<VerificationReport> verify_all_flavors(const StepSet& s, int n) {
  auto start = std::chrono::steady_clock::now();
  int model_id = classify(s).model_id;
  std::vector<std::pair<Flavor, AsymptoticTerm>> rows;
  for (Flavor f : {Flavor::Anywhere, Flavor::XAxis, Flavor::YAxis, Flavor::Origin}) {
    try {
      rows.emplace_back(f, predicted_asymptotics(s, f));
    } catch (const NotEncoded&) {
    }
  }
  int length = n;
  if (length <= 0) {
    for (const auto& [f, t] : rows) length = std::max(length, default_length(t));
  }
  const double rho_any = rows.front().second.rho_value();
  CountOptions opt;
  opt.max_scaled_n = std::max(opt.max_scaled_n, length);
  opt.keep_grids = false;
  ScaledCounts counts = count_scaled(s, length, rho_any, opt);
  double dp_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<VerificationReport> out;
  for (const auto& [f, predicted] : rows) {
    auto t0 = std::chrono::steady_clock::now();
    const double rho0 = predicted.rho_value();
    // each flavor is estimated at its own length
    const int used = n > 0 ? n : default_length(predicted);
    const auto& full = select(counts.sequences, f);
    std::vector<double> seq(full.begin(), full.begin() + used + 1);
    const double log_ratio = std::log(rho_any) - std::log(rho0);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (seq[k] != 0) seq[k] *= std::exp(static_cast<double>(k) * log_ratio);
    }
    GrowthEstimate e = estimate_growth_auto(seq, rho0, predicted.period);
    VerificationReport rep = compare(s, model_id, f, predicted, e, default_tolerances(model_id, f, predicted), used);
    rep.seconds = dp_seconds / static_cast<double>(rows.size()) +
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(rep);
  }
  return out;
}

}  // namespace quadwalk
