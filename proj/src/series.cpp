#include "quadwalk/series.hpp"

#include "quadwalk/bivariate.hpp"
#include "quadwalk/errors.hpp"
#include "quadwalk/group.hpp"

#include <algorithm>
#include <cstdlib>

namespace quadwalk {

namespace {

int max_abs_exponent(const LaurentPolynomial2& p) {
  int w = 0;
  for (const auto& kv : p.terms()) w = std::max({w, std::abs(kv.first[0]), std::abs(kv.first[1])});
  return w;
}

LaurentPolynomial3 lift(const LaurentPolynomial2& p) {
  LaurentPolynomial3 r;
  for (const auto& [e, c] : p.terms()) r.add_term({e[0], e[1], 0}, c);
  return r;
}

LaurentPolynomial2 drop_t(const LaurentPolynomial3& p) {
  LaurentPolynomial2 r;
  for (const auto& [e, c] : p.terms()) {
    if (e[2] != 0) throw std::logic_error("unexpected t dependence");
    r.add_term({e[0], e[1]}, c);
  }
  return r;
}

bool depends_on_t(const LaurentPolynomial3& p) {
  return std::any_of(p.terms().begin(), p.terms().end(), [](const auto& kv) { return kv.first[2] != 0; });
}

// Exact quotient p / d for Laurent p and polynomial d; false if d does not divide p.
bool try_divide(const LaurentPolynomial2& p, const LaurentPolynomial2& d, LaurentPolynomial2& out) {
  if (p.is_zero()) {
    out = p;
    return true;
  }
  int sx = p.min_degree(0), sy = p.min_degree(1);
  try {
    BiPoly q = bipoly::exact_div(bipoly::from_polynomial(p.shifted({-sx, -sy})), bipoly::from_polynomial(d));
    out = bipoly::to_polynomial(q).shifted({sx, sy});
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

// Dense cube of rationals indexed by (t, x, y) exponents.
class Cube {
 public:
  Cube(int m_max, int box) : m_(m_max), b_(box), data_(static_cast<std::size_t>(m_max + 1) * sq()) {}
  Rational& at(int m, int i, int j) { return data_[index(m, i, j)]; }
  std::size_t index(int m, int i, int j) const {
    return static_cast<std::size_t>(m) * sq() + static_cast<std::size_t>(i) * static_cast<std::size_t>(b_ + 1) +
           static_cast<std::size_t>(j);
  }
  int m_max() const { return m_; }
  int box() const { return b_; }
  std::vector<Rational>& data() { return data_; }

 private:
  std::size_t sq() const { return static_cast<std::size_t>(b_ + 1) * static_cast<std::size_t>(b_ + 1); }
  int m_, b_;
  std::vector<Rational> data_;
};

// In-place R <- R / f on the cube, valid because every non-constant monomial of
// f has non-negative exponents and therefore points to an earlier cell in
// (t, x, y) lexicographic order.
void divide_in_place(Cube& cube, const LaurentPolynomial3& f) {
  Rational c0 = f.coefficient({0, 0, 0});
  if (c0 == 0) throw DegenerateGeometry("denominator factor vanishes at the origin");
  struct Term {
    int m, i, j;
    std::ptrdiff_t offset;
    Rational c;
  };
  std::vector<Term> terms;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw DegenerateGeometry("denominator factor is not a polynomial");
    if (e == LaurentPolynomial3::Exponent{0, 0, 0}) continue;
    auto off = static_cast<std::ptrdiff_t>(cube.index(e[2], e[0], e[1]));
    terms.push_back({e[2], e[0], e[1], off, c});
  }
  Rational inv = Rational(1) / c0;
  std::vector<Rational>& d = cube.data();
  Rational acc;
  for (int m = 0; m <= cube.m_max(); ++m) {
    for (int i = 0; i <= cube.box(); ++i) {
      for (int j = 0; j <= cube.box(); ++j) {
        std::size_t idx = cube.index(m, i, j);
        acc = d[idx];
        for (const Term& t : terms) {
          if (m < t.m || i < t.i || j < t.j) continue;
          const Rational& prev = d[idx - static_cast<std::size_t>(t.offset)];
          if (sgn(prev) != 0) acc -= t.c * prev;
        }
        if (inv != 1) acc *= inv;
        d[idx] = acc;
      }
    }
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int window, std::vector<LaurentPolynomial2> coefficients)
    : window_(window), coeffs_(std::move(coefficients)) {
  if (window < 0) throw std::invalid_argument("window must be non-negative");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    int bound = static_cast<int>(n) + window;
    for (const auto& kv : coeffs_[n].terms()) {
      if (std::abs(kv.first[0]) > bound || std::abs(kv.first[1]) > bound) {
        throw std::logic_error("series coefficient " + std::to_string(n) + " leaves its window");
      }
    }
  }
}

const DenominatorFactor* RationalFunction3::find(const std::string& label) const {
  for (const auto& f : factors) {
    if (f.label == label) return &f;
  }
  return nullptr;
}

LaurentPolynomial3 RationalFunction3::shifted_numerator() const {
  return numerator.shifted({origin_shift, origin_shift, origin_shift});
}

std::string RationalFunction3::to_string() const {
  std::string out = "(" + numerator.to_string(kNamesXYT) + ")";
  if (origin_shift > 0) {
    out = "(x*y*t)^-" + std::to_string(origin_shift) + " * (" + shifted_numerator().to_string(kNamesXYT) + ")";
  }
  if (factors.empty()) return out;
  out += " / (";
  bool first = true;
  for (const auto& f : factors) {
    if (!first) out += " * ";
    first = false;
    out += "(" + f.poly.to_string(kNamesXYT) + ")";
    if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out + ")";
}

TruncatedSeries expand_rational(const RationalFunction3& f, int n_max) {
  if (n_max < 0) throw std::invalid_argument("order must be non-negative");
  const int s = f.origin_shift;
  LaurentPolynomial3 num = f.shifted_numerator();
  if (!num.is_polynomial()) {
    throw DegenerateGeometry("function is not analytic at the origin and no sufficient shift is declared");
  }
  // Window: numerator degree plus the growth of x, y degrees per power of t
  // in the t-dependent factors, so polynomial layers are emitted in full.
  int w = 0;
  for (const auto& kv : f.numerator.terms()) w = std::max({w, std::abs(kv.first[0]), std::abs(kv.first[1])});
  int growth = 0;
  for (const auto& fac : f.factors) {
    for (const auto& kv : fac.poly.terms()) {
      if (kv.first[2] > 0) growth = std::max(growth, std::max(kv.first[0], kv.first[1]) - kv.first[2]);
    }
  }
  w += growth * n_max;
  const int m_max = n_max + s;
  const int box = n_max + w + s;
  Cube cube(m_max, box);
  for (const auto& [e, c] : num.terms()) {
    if (e[2] <= m_max && e[0] <= box && e[1] <= box) cube.at(e[2], e[0], e[1]) = c;
  }
  std::vector<const DenominatorFactor*> order;
  for (const auto& fac : f.factors) {
    if (depends_on_t(fac.poly)) order.push_back(&fac);
  }
  for (const auto& fac : f.factors) {
    if (!depends_on_t(fac.poly)) order.push_back(&fac);
  }
  for (const DenominatorFactor* fac : order) {
    for (int k = 0; k < fac->multiplicity; ++k) divide_in_place(cube, fac->poly);
  }
  std::vector<LaurentPolynomial2> layers;
  for (int n = 0; n <= n_max; ++n) {
    LaurentPolynomial2 layer;
    int bound = n + w;
    for (int i = 0; i <= box; ++i) {
      for (int j = 0; j <= box; ++j) {
        const Rational& c = cube.at(n + s, i, j);
        if (sgn(c) == 0) continue;
        int x = i - s, y = j - s;
        if (std::abs(x) <= bound && std::abs(y) <= bound) layer.add_term({x, y}, c);
      }
    }
    layers.push_back(std::move(layer));
  }
  return TruncatedSeries(w, std::move(layers));
}

TruncatedSeries extract_nonneg(const TruncatedSeries& s) {
  std::vector<LaurentPolynomial2> out;
  for (const auto& c : s.coefficients()) {
    LaurentPolynomial2 kept;
    for (const auto& [e, v] : c.terms()) {
      if (e[0] >= 0 && e[1] >= 0) kept.add_term(e, v);
    }
    out.push_back(std::move(kept));
  }
  return TruncatedSeries(s.window(), std::move(out));
}

std::vector<Rational> diagonal(const TruncatedSeries& s) {
  std::vector<Rational> d;
  for (int n = 0; n <= s.order(); ++n) d.push_back(s.coefficient(n).coefficient({n, n}));
  return d;
}

RationalFunction3 diagonal_representation(const StepSet& s, int a, int b) {
  if ((a != 0 && a != 1) || (b != 0 && b != 1)) throw std::invalid_argument("a and b must be 0 or 1");
  ModelClass mc = classify(s);
  if (mc.kind == ModelKind::Algebraic || mc.kind == ModelKind::InfiniteGroup ||
      mc.kind == ModelKind::HalfplaneReducible) {
    throw ClassMismatch("no diagonal representation for " + to_string(mc.kind) + " model " + s.to_string());
  }
  WalkGroup g = generate_group(s);
  RationalExpr2 cleared = orbit_sum_rational(g).inverted() * RationalExpr2(LaurentPolynomial2::monomial({1, 1}));

  // Split the denominator into a monomial and a part that is nonzero at the origin.
  const LaurentPolynomial2& den = cleared.denominator();
  int mx = den.min_degree(0), my = den.min_degree(1);
  LaurentPolynomial2 aux = den.shifted({-mx, -my});
  if (aux.coefficient({0, 0}) == 0) throw DegenerateGeometry("orbit-sum denominator vanishes at the origin");
  Rational c0 = aux.coefficient({0, 0});
  aux *= Rational(1) / c0;
  LaurentPolynomial2 top = cleared.numerator().shifted({-mx, -my}) * (Rational(1) / c0);

  const LaurentPolynomial2 one(1);
  const LaurentPolynomial2 one_minus_x = one - LaurentPolynomial2::monomial({1, 0});
  const LaurentPolynomial2 one_minus_y = one - LaurentPolynomial2::monomial({0, 1});
  int ax = a, by = b;
  LaurentPolynomial2 q;
  while (ax > 0 && try_divide(top, one_minus_x, q)) {
    top = q;
    --ax;
  }
  while (by > 0 && try_divide(top, one_minus_y, q)) {
    top = q;
    --by;
  }

  RationalFunction3 f;
  f.numerator = lift(top);
  LaurentPolynomial2 kernel_xy = characteristic_polynomial(s).rescaled_exponents({-1, -1}).shifted({1, 1});
  LaurentPolynomial3 kernel = LaurentPolynomial3(1) - lift(kernel_xy).shifted({0, 0, 1});
  f.factors.push_back({kernel, 1, "kernel"});
  if (aux != one) f.factors.push_back({lift(aux), 1, "aux"});
  if (ax > 0) f.factors.push_back({lift(one_minus_x), ax, "1-x"});
  if (by > 0) f.factors.push_back({lift(one_minus_y), by, "1-y"});
  int shift = 0;
  if (!top.is_zero()) shift = std::max({0, -top.min_degree(0), -top.min_degree(1)});
  f.origin_shift = shift;
  return f;
}

std::vector<Rational> diagonal_sequence(const RationalFunction3& f, int n_max) {
  return diagonal(expand_rational(f, n_max));
}

TruncatedSeries orbit_sum_integrand(const StepSet& s, int n_max) {
  LaurentPolynomial2 base = orbit_sum(generate_group(s)).shifted({-1, -1});
  LaurentPolynomial2 S = characteristic_polynomial(s);
  std::vector<LaurentPolynomial2> layers;
  LaurentPolynomial2 cur = base;
  for (int n = 0; n <= n_max; ++n) {
    layers.push_back(cur);
    cur *= S;
  }
  return TruncatedSeries(max_abs_exponent(base), std::move(layers));
}

LemmaCheck check_lemma_diag(const TruncatedSeries& p, int n_max, std::array<int, 2> substitution) {
  if (n_max > p.order()) throw std::invalid_argument("series order is smaller than the requested check order");
  LemmaCheck result;
  const char* names[4] = {"Q(1,1)", "Q(0,1)", "Q(1,0)", "Q(0,0)"};
  // (divide by 1-x, divide by 1-y) for each identity.
  const int alpha[4] = {1, 0, 1, 0};
  const int beta[4] = {1, 1, 0, 0};
  for (int n = 0; n <= n_max; ++n) {
    const LaurentPolynomial2& pn = p.coefficient(n);
    Rational lhs[4];
    for (const auto& [e, c] : pn.terms()) {
      if (e[0] < 0 || e[1] < 0) continue;
      lhs[0] += c;
      if (e[0] == 0) lhs[1] += c;
      if (e[1] == 0) lhs[2] += c;
      if (e[0] == 0 && e[1] == 0) lhs[3] += c;
    }
    // Layer n of P(x^sx, y^sy, xyt) is (xy)^n P_n(x^sx, y^sy).
    LaurentPolynomial2 layer = pn.rescaled_exponents(substitution).shifted({n, n});
    int lo_x = layer.is_zero() ? 0 : layer.min_degree(0);
    int lo_y = layer.is_zero() ? 0 : layer.min_degree(1);
    LaurentPolynomial2 gx, gy;
    for (int k = 0; k <= std::max(0, n - lo_x); ++k) gx.add_term({k, 0}, 1);
    for (int k = 0; k <= std::max(0, n - lo_y); ++k) gy.add_term({0, k}, 1);
    for (int id = 0; id < 4; ++id) {
      LaurentPolynomial2 r = layer;
      if (alpha[id]) r *= gx;
      if (beta[id]) r *= gy;
      Rational rhs = r.coefficient({n, n});
      if (rhs != lhs[id]) {
        result.holds = false;
        result.identity = names[id];
        result.n = n;
        result.lhs = lhs[id];
        result.rhs = rhs;
        return result;
      }
    }
  }
  return result;
}

}  // namespace quadwalk
