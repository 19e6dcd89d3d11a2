#pragma once

#include "quadwalk/bivariate.hpp"
#include "quadwalk/model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace quadwalk {

struct BirationalMap {
  RationalExpr2 x_image;
  RationalExpr2 y_image;
  friend bool operator==(const BirationalMap&, const BirationalMap&) = default;
};

BirationalMap identity_map();

// f(g(x,y)).
RationalExpr2 apply_map(const BirationalMap& g, const RationalExpr2& f);
// (outer ∘ inner)(x,y) = outer(inner(x,y)).
BirationalMap compose(const BirationalMap& outer, const BirationalMap& inner);

struct Generators {
  BirationalMap phi;  // (x, ȳ A_{-1}(x)/A_1(x))
  BirationalMap psi;  // (x̄ B_{-1}(y)/B_1(y), y)
};

Generators generators(const StepSet& s);

struct GroupElement {
  std::string word;  // letters 'F' (Φ) and 'P' (Ψ), leftmost applied last; "" is the identity
  BirationalMap map;
  int sign = 1;
};

enum class GroupStatus { Finite, ExceedsBound, DegreeCapExceeded };

std::string to_string(GroupStatus s);

struct WalkGroup {
  GroupStatus status = GroupStatus::Finite;
  std::vector<GroupElement> elements;  // all elements when finite, those found otherwise
  bool finite() const { return status == GroupStatus::Finite; }
  int order() const { return static_cast<int>(elements.size()); }
};

struct GroupOptions {
  int bound = 200;
  int degree_cap = 8;
};

WalkGroup generate_group(const StepSet& s, const GroupOptions& options = {});

// Σ sgn(g) g(xy) as a reduced rational function.
RationalExpr2 orbit_sum_rational(const WalkGroup& g);
// The same sum; throws when it is not a Laurent polynomial.
LaurentPolynomial2 orbit_sum(const WalkGroup& g);

std::string describe_group(const WalkGroup& g);

}  // namespace quadwalk
