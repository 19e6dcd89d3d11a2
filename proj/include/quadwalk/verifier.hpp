#pragma once

#include "quadwalk/asymptotics.hpp"
#include "quadwalk/enumeration.hpp"
#include "quadwalk/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadwalk {

struct EstimateOptions {
  int order = 3;          // Richardson order m
  int classes = 12;       // residue classes analysed separately
  double low = 0.25;      // nodes span [low*N, N]
  double power = 1.0;     // expansion variable h = n^-power
};

struct GrowthEstimate {
  double rho = 0;
  double alpha = 0;
  std::vector<double> kappa;        // per residue mod period
  std::vector<bool> zero_class;     // residue identically zero in the sampled range
  int n_min = 0, n_max = 0;
  int order = 0;
  double power = 1;
  double rho_gap = 0, alpha_gap = 0;  // last two extrapolation orders
  std::vector<double> kappa_gap;      // relative
  bool converged = true;
  std::string diagnostics;
};

// c holds c_n / rho0^n for n = 0..N.
GrowthEstimate estimate_growth(const std::vector<double>& c, double rho0, int period, const EstimateOptions& options = {});
// Tries the candidate expansions and keeps the one with the smallest gap between consecutive orders.
GrowthEstimate estimate_growth_auto(const std::vector<double>& c, double rho0, int period);

struct Tolerances {
  double rho_ratio = 1e-6;
  double alpha_abs = 0.02;
  double kappa_rel = 0.01;
  bool loose = false;
};

Tolerances default_tolerances(int model_id, Flavor flavor, const AsymptoticTerm& term);
int default_length(const AsymptoticTerm& term);

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct VerificationReport {
  int model_id = 0;
  StepSet steps;
  Flavor flavor = Flavor::Anywhere;
  AsymptoticTerm predicted;
  GrowthEstimate estimated;
  Tolerances tolerances;
  Verdict verdict = Verdict::Inconclusive;
  int n_used = 0;
  double seconds = 0;
  std::vector<std::string> failures;
};

VerificationReport compare(const StepSet& s, int model_id, Flavor flavor, const AsymptoticTerm& predicted,
                           const GrowthEstimate& estimate, const Tolerances& tol, int n_used);

// n <= 0 selects default_length; tolerances default per row.
VerificationReport verify_model(const StepSet& s, Flavor flavor, int n = 0, std::optional<Tolerances> tol = std::nullopt);
// One DP for all encoded flavors; each sequence is rescaled and cut to its default length.
std::vector<VerificationReport> verify_all_flavors(const StepSet& s, int n = 0);

}  // namespace quadwalk
