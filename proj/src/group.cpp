#include "quadwalk/group.hpp"

#include "quadwalk/errors.hpp"

#include <deque>
#include <sstream>

namespace quadwalk {

namespace {

LaurentPolynomial2 lift_x(const LaurentPolynomial1& p) {
  LaurentPolynomial2 r;
  for (const auto& [e, c] : p.terms()) r.add_term({e[0], 0}, c);
  return r;
}

LaurentPolynomial2 lift_y(const LaurentPolynomial1& p) {
  LaurentPolynomial2 r;
  for (const auto& [e, c] : p.terms()) r.add_term({0, e[0]}, c);
  return r;
}

// Homogenized substitution: returns P(X,Y) * Xd^dx * Yd^dy as a polynomial.
BiPoly substitute(const LaurentPolynomial2& p, const std::vector<BiPoly>& xn_pow, const std::vector<BiPoly>& xd_pow,
                  const std::vector<BiPoly>& yn_pow, const std::vector<BiPoly>& yd_pow, int dx, int dy) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) {
    auto i = static_cast<std::size_t>(e[0]);
    auto j = static_cast<std::size_t>(e[1]);
    BiPoly term = bipoly::mul(xn_pow[i], xd_pow[static_cast<std::size_t>(dx) - i]);
    term = bipoly::mul(term, yn_pow[j]);
    term = bipoly::mul(term, yd_pow[static_cast<std::size_t>(dy) - j]);
    out = bipoly::add(out, bipoly::mul(term, UPoly{c}));
  }
  return out;
}

std::vector<BiPoly> powers(const BiPoly& b, int k) {
  std::vector<BiPoly> v{BiPoly{UPoly{Rational(1)}}};
  for (int i = 1; i <= k; ++i) v.push_back(bipoly::mul(v.back(), b));
  return v;
}

}  // namespace

BirationalMap identity_map() {
  return {RationalExpr2(LaurentPolynomial2::variable(0)), RationalExpr2(LaurentPolynomial2::variable(1))};
}

RationalExpr2 apply_map(const BirationalMap& g, const RationalExpr2& f) {
  const LaurentPolynomial2& fn = f.numerator();
  const LaurentPolynomial2& fd = f.denominator();
  int dx = fd.max_degree(0), dy = fd.max_degree(1);
  if (!fn.is_zero()) {
    dx = std::max(dx, fn.max_degree(0));
    dy = std::max(dy, fn.max_degree(1));
  }
  BiPoly xn = bipoly::from_polynomial(g.x_image.numerator());
  BiPoly xd = bipoly::from_polynomial(g.x_image.denominator());
  BiPoly yn = bipoly::from_polynomial(g.y_image.numerator());
  BiPoly yd = bipoly::from_polynomial(g.y_image.denominator());
  auto xnp = powers(xn, dx), xdp = powers(xd, dx), ynp = powers(yn, dy), ydp = powers(yd, dy);
  BiPoly num = substitute(fn, xnp, xdp, ynp, ydp, dx, dy);
  BiPoly den = substitute(fd, xnp, xdp, ynp, ydp, dx, dy);
  if (bipoly::is_zero(den)) throw std::domain_error("composition makes the denominator identically zero");
  return make_reduced(num, den);
}

BirationalMap compose(const BirationalMap& outer, const BirationalMap& inner) {
  return {apply_map(inner, outer.x_image), apply_map(inner, outer.y_image)};
}

Generators generators(const StepSet& s) {
  Sections sec = sections(s);
  if (sec.a_minus.is_zero() || sec.a_plus.is_zero() || sec.b_minus.is_zero() || sec.b_plus.is_zero()) {
    throw ClassMismatch("group generators need steps in all four directions; " + s.to_string() +
                        " is half-plane reducible");
  }
  RationalExpr2 x(LaurentPolynomial2::variable(0));
  RationalExpr2 y(LaurentPolynomial2::variable(1));
  RationalExpr2 xbar(LaurentPolynomial2::variable(0, -1));
  RationalExpr2 ybar(LaurentPolynomial2::variable(1, -1));
  Generators g;
  g.phi = {x, ybar * RationalExpr2(lift_x(sec.a_minus), lift_x(sec.a_plus))};
  g.psi = {xbar * RationalExpr2(lift_y(sec.b_minus), lift_y(sec.b_plus)), y};
  return g;
}

std::string to_string(GroupStatus s) {
  switch (s) {
    case GroupStatus::Finite: return "finite";
    case GroupStatus::ExceedsBound: return "exceeds-bound";
    case GroupStatus::DegreeCapExceeded: return "degree-cap-exceeded";
  }
  return "?";
}

WalkGroup generate_group(const StepSet& s, const GroupOptions& options) {
  if (options.bound < 2) throw std::invalid_argument("group bound must be at least 2");
  Generators gen = generators(s);
  WalkGroup group;
  group.elements.push_back({"", identity_map(), 1});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (char letter : {'F', 'P'}) {
      const GroupElement& cur = group.elements[idx];
      if (!cur.word.empty() && cur.word.front() == letter) continue;
      const BirationalMap& gmap = letter == 'F' ? gen.phi : gen.psi;
      BirationalMap m = compose(gmap, cur.map);
      bool seen = false;
      for (const auto& e : group.elements) {
        if (e.map == m) {
          seen = true;
          break;
        }
      }
      if (seen) continue;
      if (m.x_image.degree() > options.degree_cap || m.y_image.degree() > options.degree_cap) {
        group.status = GroupStatus::DegreeCapExceeded;
        return group;
      }
      if (static_cast<int>(group.elements.size()) >= options.bound) {
        group.status = GroupStatus::ExceedsBound;
        return group;
      }
      GroupElement e{std::string(1, letter) + cur.word, std::move(m), -cur.sign};
      group.elements.push_back(std::move(e));
      queue.push_back(group.elements.size() - 1);
    }
  }
  return group;
}

RationalExpr2 orbit_sum_rational(const WalkGroup& g) {
  if (!g.finite()) throw ClassMismatch("orbit sum needs a finite group");
  RationalExpr2 total;
  for (const auto& e : g.elements) {
    RationalExpr2 term = e.map.x_image * e.map.y_image;
    total = e.sign > 0 ? total + term : total - term;
  }
  return total;
}

LaurentPolynomial2 orbit_sum(const WalkGroup& g) {
  if (!g.finite()) throw ClassMismatch("orbit sum needs a finite group");
  LaurentPolynomial2 total;
  for (const auto& e : g.elements) {
    RationalExpr2 term = e.map.x_image * e.map.y_image;
    if (!term.is_laurent()) {
      throw ClassMismatch("orbit element g(xy) = " + term.to_string() + " is not a Laurent polynomial");
    }
    total += term.as_laurent() * Rational(e.sign);
  }
  return total;
}

std::string describe_group(const WalkGroup& g) {
  std::ostringstream out;
  out << "status: " << to_string(g.status) << "\n";
  out << (g.finite() ? "order: " : "elements found: ") << g.order() << "\n";
  for (const auto& e : g.elements) {
    std::string word;
    for (char c : e.word) word += c == 'F' ? "Phi" : "Psi";
    if (word.empty()) word = "id";
    out << (e.sign > 0 ? "+ " : "- ") << word << ": (x, y) -> (" << e.map.x_image.to_string() << ", "
        << e.map.y_image.to_string() << ")\n";
  }
  return out.str();
}

}  // namespace quadwalk
