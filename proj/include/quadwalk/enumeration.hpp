#pragma once

#include "quadwalk/model.hpp"
#include "quadwalk/rational.hpp"

#include <string>
#include <vector>

namespace quadwalk {

template <class T>
struct BoundarySeq {
  std::vector<T> anywhere;  // C(1,1,t)
  std::vector<T> x_axis;    // C(1,0,t): walks ending at y = 0
  std::vector<T> y_axis;    // C(0,1,t): walks ending at x = 0
  std::vector<T> origin;    // C(0,0,t)
};

using BoundarySequences = BoundarySeq<Integer>;

enum class Flavor { Anywhere, XAxis, YAxis, Origin };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& text);
// Exchanging x and y exchanges the x_axis and y_axis flavors.
Flavor swap_flavor(Flavor f);

template <class T>
const std::vector<T>& select(const BoundarySeq<T>& s, Flavor f) {
  switch (f) {
    case Flavor::Anywhere: return s.anywhere;
    case Flavor::XAxis: return s.x_axis;
    case Flavor::YAxis: return s.y_axis;
    case Flavor::Origin: return s.origin;
  }
  return s.anywhere;
}

// Exact counts c_{i,j,n} for 0 <= i,j <= n; i is the x coordinate.
class OccupancyGrid {
 public:
  explicit OccupancyGrid(int n);
  int length() const { return n_; }
  const Integer& at(int i, int j) const;
  Integer& at(int i, int j);

 private:
  int n_;
  std::vector<Integer> counts_;
};

struct CountOptions {
  int max_exact_n = 2000;
  int max_scaled_n = 20000;
  bool keep_grids = true;
};

struct ExactCounts {
  std::vector<OccupancyGrid> grids;  // empty unless keep_grids
  BoundarySequences sequences;
};

ExactCounts count_exact(const StepSet& s, int n_max, const CountOptions& options = {});

struct ScaledCounts {
  double scale = 1;          // rho; entry n holds c_n / rho^n
  std::string scale_label;   // exact form of rho when known
  BoundarySeq<double> sequences;
  bool underflow_warning = false;
};

ScaledCounts count_scaled(const StepSet& s, int n_max, double rho, const CountOptions& options = {});
ScaledCounts count_scaled(const StepSet& s, int n_max, const Rational& rho, const CountOptions& options = {});

struct FunctionalEquationCheck {
  bool holds = true;
  // First coefficient [t^n x^i y^j] where the two sides differ.
  int n = -1, i = 0, j = 0;
  Rational lhs, rhs;
};

// Checks xy(1-tS)C = xy - t y B_{-1}(y) C(0,y) - t x A_{-1}(x) C(x,0) + eps t C(0,0)
// coefficientwise for n <= n_max.
FunctionalEquationCheck check_functional_equation(const StepSet& s, int n_max);
// Same identity with C taken from the walks of `counted` and S, A, B, eps from
// `equation`; used to confirm that the check detects a wrong recurrence.
FunctionalEquationCheck check_functional_equation(const StepSet& counted, const StepSet& equation, int n_max);

std::string sequences_csv(const BoundarySequences& s);
std::string sequences_csv(const ScaledCounts& s);

}  // namespace quadwalk
