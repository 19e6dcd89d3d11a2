#pragma once

#include "quadwalk/laurent.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quadwalk {

struct Step {
  int dx = 0;
  int dy = 0;
  auto operator<=>(const Step&) const = default;
};

std::string compass_name(Step s);

class StepSet {
 public:
  StepSet() = default;
  explicit StepSet(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool contains(Step s) const;

  std::optional<int> catalog_id() const { return catalog_id_; }
  StepSet with_catalog_id(std::optional<int> id) const;

  StepSet swapped() const;
  StepSet reversed() const;
  StepSet reflected_x() const;  // (dx,dy) -> (-dx,dy)
  StepSet reflected_y() const;  // (dx,dy) -> (dx,-dy)

  // Compass names in N, NE, E, SE, S, SW, W, NW order.
  std::string to_string() const;
  // 8-bit mask in the same order.
  unsigned mask() const;

  friend bool operator==(const StepSet& a, const StepSet& b) { return a.steps_ == b.steps_; }

 private:
  std::vector<Step> steps_;
  std::optional<int> catalog_id_;
};

struct ParsedStepSet {
  StepSet steps;
  std::vector<std::string> notices;
};

ParsedStepSet parse_step_set(std::string_view text);

LaurentPolynomial2 characteristic_polynomial(const StepSet& s);

struct Sections {
  LaurentPolynomial1 a_minus, a_zero, a_plus;  // coefficients of y^-1, y^0, y^1
  LaurentPolynomial1 b_minus, b_zero, b_plus;  // coefficients of x^-1, x^0, x^1
};

Sections sections(const StepSet& s);

// Rebuilds S(x,y) from the y-sections and from the x-sections.
std::pair<LaurentPolynomial2, LaurentPolynomial2> recombine_sections(const Sections& sec);

std::pair<int, int> drift(const StepSet& s);

enum class ModelKind {
  HalfplaneReducible,
  HighlySymmetric,
  PositiveDrift,
  NegativeDrift,
  Sporadic,
  Algebraic,
  InfiniteGroup,
};

std::string to_string(ModelKind k);

struct ModelClass {
  ModelKind kind = ModelKind::HalfplaneReducible;
  // Catalog id of the matching canonical model (0 if none); for Sporadic and
  // Algebraic this is the "which" model.
  int model_id = 0;
  bool axis_swapped = false;
};

bool symmetric_about_y_axis(const StepSet& s);  // invariant under dx -> -dx
bool symmetric_about_x_axis(const StepSet& s);  // invariant under dy -> -dy

struct Canonical {
  StepSet steps;
  bool swapped = false;
};

Canonical canonicalize(const StepSet& s);

ModelClass classify(const StepSet& s);

// Step set in the orientation used by downstream analysis: the catalog's
// representative (the encoded orientation for ids 1..23), with the swap applied.
Canonical analysis_orientation(const StepSet& s);

}  // namespace quadwalk
