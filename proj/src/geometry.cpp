#include "quadwalk/geometry.hpp"

#include "quadwalk/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace quadwalk {

namespace {

ComplexQuad from_q(const Rational& q) { return ComplexQuad(q); }

using QPoly = std::vector<RealQuad>;  // constant term first

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * RealQuad(static_cast<int>(k)));
  trim(d);
  return d;
}

// quotient and remainder of a by b (b non-zero)
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, RealQuad());
  RealQuad lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    RealQuad c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = a[k + shift] - c * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RealQuad value_at(const QPoly& p, const RealQuad& s) {
  RealQuad v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * s + *it;
  return v;
}

int sign_changes(const std::vector<QPoly>& chain, const RealQuad& s) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int sg = value_at(p, s).sign();
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

std::string swap_label(const std::string& label) {
  if (label == "1-x") return "1-y";
  if (label == "1-y") return "1-x";
  return label;
}

CriticalPoint make_point(const std::string& name, const ComplexQuad& x, const ComplexQuad& y, const ComplexQuad& t,
                         const RationalFunction3& f) {
  if (x.is_zero() || y.is_zero() || t.is_zero()) throw std::logic_error("critical point off the torus");
  CriticalPoint p;
  p.name = name;
  p.coords = {AlgebraicNumber(x), AlgebraicNumber(y), AlgebraicNumber(t)};
  for (const auto& factor : f.factors) {
    if (evaluate(factor.poly, p.point()).is_zero()) p.stratum.push_back(factor.label);
  }
  if (p.stratum.empty()) throw std::logic_error("point " + name + " is not on the singular variety");
  return p;
}

bool is_critical(const RationalFunction3& f, const CriticalPoint& p) {
  return !cone_coefficients(stratum_geometry(f, p.point())).empty();
}

void finish_cone(const RationalFunction3& f, CriticalPoint& p) {
  auto coeffs = cone_coefficients(stratum_geometry(f, p.point()));
  p.cone_interior = !coeffs.empty();
  for (const auto& a : coeffs) {
    if (!a.is_real() || a.re().sign() <= 0) p.cone_interior = false;
  }
}

bool same_moduli(const CriticalPoint& a, const CriticalPoint& b) {
  for (int k = 0; k < 3; ++k) {
    if (!(a.coords[k].exact.norm() == b.coords[k].exact.norm())) return false;
  }
  return true;
}

struct Setup {
  ModelClass cls;
  Canonical oriented;
  RationalFunction3 f;
  LaurentPolynomial2 p;
};

Setup setup(const StepSet& s) {
  Setup st;
  st.cls = classify(s);
  switch (st.cls.kind) {
    case ModelKind::HighlySymmetric:
    case ModelKind::PositiveDrift:
    case ModelKind::NegativeDrift:
    case ModelKind::Sporadic: break;
    default:
      throw ClassMismatch("critical points are implemented for the highly symmetric, one-symmetry and sporadic "
                          "classes; " + s.to_string() + " is " + to_string(st.cls.kind));
  }
  st.oriented = analysis_orientation(s);
  st.f = diagonal_representation(st.oriented.steps, 1, 1);
  st.p = kernel_polynomial(st.oriented.steps);
  return st;
}

std::vector<CriticalPoint> orient(std::vector<CriticalPoint> pts, bool swapped) {
  if (!swapped) return pts;
  for (auto& p : pts) {
    std::swap(p.coords[0], p.coords[1]);
    for (auto& label : p.stratum) label = swap_label(label);
  }
  return pts;
}

ComplexQuad t_on_kernel(const LaurentPolynomial2& p, const ComplexQuad& x, const ComplexQuad& y) {
  ComplexQuad v = evaluate(p, x, y);
  if (v.is_zero()) return {};
  return v.inverse();
}

RealQuad one_symmetry_y1(const StepSet& s) {
  Sections sec = sections(s);
  Rational a1 = sec.a_plus.evaluate({Rational(1)});
  Rational am1 = sec.a_minus.evaluate({Rational(1)});
  return RealQuad::sqrt_of_rational(a1 / am1);
}

void mark_minimal(std::vector<CriticalPoint>& pts, const RationalFunction3& f) {
  for (auto& p : pts) p.minimal = certify_minimality(p, f).certified;
}

const std::vector<ComplexQuad>& unit_phases() {
  static const std::vector<ComplexQuad> phases = {ComplexQuad(1), ComplexQuad(-1), ComplexQuad::i(), -ComplexQuad::i()};
  return phases;
}

}  // namespace

ComplexQuad evaluate(const LaurentPolynomial3& p, const Point3& at) { return p.evaluate(at, from_q); }

ComplexQuad evaluate(const LaurentPolynomial2& p, const ComplexQuad& x, const ComplexQuad& y) {
  return p.evaluate(std::array<ComplexQuad, 2>{x, y}, from_q);
}

ComplexQuad CriticalPoint::growth() const {
  return (coords[0].exact * coords[1].exact * coords[2].exact).inverse();
}

std::string CriticalPoint::to_string() const {
  std::ostringstream out;
  out << name << " = (" << coords[0].to_string() << ", " << coords[1].to_string() << ", " << coords[2].to_string()
      << ")";
  return out.str();
}

LaurentPolynomial2 kernel_polynomial(const StepSet& s) {
  LaurentPolynomial2 p;
  for (const auto& st : s.steps()) p.add_term({1 - st.dx, 1 - st.dy}, Rational(1));
  return p;
}

StratumGeometry stratum_geometry(const RationalFunction3& f, const Point3& p) {
  StratumGeometry g;
  for (const auto& factor : f.factors) {
    if (!evaluate(factor.poly, p).is_zero()) continue;
    Point3 v;
    for (std::size_t k = 0; k < 3; ++k) v[k] = -(p[k] * evaluate(factor.poly.derivative(k), p));
    g.lognormals.push_back(v);
  }
  return g;
}

std::vector<ComplexQuad> cone_coefficients(const StratumGeometry& g) {
  const std::size_t k = g.lognormals.size();
  if (k == 0 || k > 3) throw DegenerateGeometry("expected one to three active factors");
  // augmented 3 x (k+1) system
  std::vector<std::vector<ComplexQuad>> m(3, std::vector<ComplexQuad>(k + 1));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = g.lognormals[c][r];
    m[r][k] = ComplexQuad(1);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < 3 && m[piv][c].is_zero()) ++piv;
    if (piv == 3) throw DegenerateGeometry("lognormals are linearly dependent (non-transverse intersection)");
    std::swap(m[piv], m[row]);
    ComplexQuad inv = m[row][c].inverse();
    for (auto& e : m[row]) e = e * inv;
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      ComplexQuad factor = m[r][c];
      for (std::size_t cc = 0; cc <= k; ++cc) m[r][cc] = m[r][cc] - factor * m[row][cc];
    }
    pivots.push_back(row);
    ++row;
  }
  for (std::size_t r = row; r < 3; ++r) {
    if (!m[r][k].is_zero()) return {};
  }
  std::vector<ComplexQuad> a(k);
  for (std::size_t c = 0; c < k; ++c) a[c] = m[pivots[c]][k];
  return a;
}

bool dual_cone_contains_one(const StratumGeometry& g) {
  auto a = cone_coefficients(g);
  if (a.empty()) return false;
  for (const auto& c : a) {
    if (!c.is_real() || c.re().sign() < 0) return false;
  }
  return true;
}

int count_roots_open_unit(const std::vector<RealQuad>& coeffs) {
  QPoly p = coeffs;
  trim(p);
  if (p.empty()) throw std::invalid_argument("zero polynomial has no isolated roots");
  while (p.front().is_zero()) p.erase(p.begin());  // roots at s = 0 are outside the interval
  if (p.size() == 1) return 0;
  QPoly q = divmod(p, gcd(p, derivative(p))).first;
  std::vector<QPoly> chain = {q, derivative(q)};
  while (chain.back().size() > 1) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(r);
  }
  int roots = sign_changes(chain, RealQuad(0)) - sign_changes(chain, RealQuad(1));
  if (value_at(q, RealQuad(1)).is_zero()) --roots;
  return roots;
}

MinimalityCertificate certify_minimality(const CriticalPoint& p, const RationalFunction3& f, int grid) {
  bool on_v = false;
  for (const auto& factor : f.factors) on_v = on_v || evaluate(factor.poly, p.point()).is_zero();
  if (!on_v) throw DegenerateGeometry("point " + p.name + " is not on the singular variety");
  std::array<RealQuad, 3> mod;
  for (int k = 0; k < 3; ++k) mod[k] = p.coords[k].exact.modulus();

  MinimalityCertificate cert;
  for (const auto& factor : f.factors) {
    QPoly along;
    for (const auto& [e, c] : factor.poly.terms()) {
      int deg = e[0] + e[1] + e[2];
      if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::logic_error("denominator factor is not a polynomial");
      if (static_cast<int>(along.size()) <= deg) along.resize(deg + 1);
      RealQuad term = c;
      for (int k = 0; k < 3; ++k) {
        for (int j = 0; j < e[k]; ++j) term = term * mod[k];
      }
      along[deg] = along[deg] + term;
    }
    if (count_roots_open_unit(along) > 0) cert.blocking.push_back(factor.label);
  }
  cert.certified = cert.blocking.empty();

  std::array<double, 3> r;
  for (int k = 0; k < 3; ++k) r[k] = mod[k].to_double();
  double margin = std::numeric_limits<double>::infinity();
  const double two_pi = 2 * std::numbers::pi;
  for (const auto& factor : f.factors) {
    std::vector<std::pair<std::complex<double>, std::array<int, 3>>> terms;
    for (const auto& [e, c] : factor.poly.terms()) terms.push_back({Rational(c).get_d(), e});
    for (double scale : {0.5, 0.9, 0.99}) {
      for (int a = 0; a < grid; ++a) {
        for (int b = 0; b < grid; ++b) {
          for (int c = 0; c < grid; ++c) {
            std::array<std::complex<double>, 3> z = {std::polar(scale * r[0], two_pi * a / grid),
                                                     std::polar(scale * r[1], two_pi * b / grid),
                                                     std::polar(scale * r[2], two_pi * c / grid)};
            std::complex<double> v = 0;
            for (const auto& [coef, e] : terms) v += coef * std::pow(z[0], e[0]) * std::pow(z[1], e[1]) * std::pow(z[2], e[2]);
            margin = std::min(margin, std::abs(v));
          }
        }
      }
    }
  }
  cert.sampled_margin = margin;
  cert.sampled_ok = margin > 1e-9;
  return cert;
}

std::vector<CriticalPoint> critical_points(const StepSet& s) {
  Setup st = setup(s);
  const RationalFunction3& f = st.f;
  std::vector<CriticalPoint> pts;
  const int size = static_cast<int>(st.oriented.steps.size());
  switch (st.cls.kind) {
    case ModelKind::HighlySymmetric: {
      int idx = 1;
      for (int x : {1, -1}) {
        for (int y : {1, -1}) {
          ComplexQuad t = t_on_kernel(st.p, x, y);
          if (t.is_zero() || !(t.norm() == RealQuad(Rational(1, size * size)))) continue;
          CriticalPoint p = make_point("rho" + std::to_string(idx), x, y, t, f);
          if (!is_critical(f, p)) continue;
          pts.push_back(p);
          ++idx;
        }
      }
      break;
    }
    case ModelKind::PositiveDrift:
    case ModelKind::NegativeDrift: {
      RealQuad y1 = one_symmetry_y1(st.oriented.steps);
      ComplexQuad t1 = t_on_kernel(st.p, 1, y1);
      pts.push_back(make_point("p1", 1, y1, t1, f));
      pts.push_back(make_point("p2", 1, 1, ComplexQuad(Rational(1, size)), f));
      for (const auto& p : pts) {
        if (!is_critical(f, p)) throw std::logic_error(p.name + " fails the criticality equations");
      }
      break;
    }
    case ModelKind::Sporadic: {
      const ComplexQuad nu = ComplexQuad::root_of_unity_12(4), nu2 = nu * nu;
      const Rational third(1, 3);
      if (st.cls.model_id == 15) {
        pts.push_back(make_point("rho1", 1, 1, ComplexQuad(third), f));
        pts.push_back(make_point("rho2", nu, nu2, nu2 * ComplexQuad(third), f));
        pts.push_back(make_point("rho3", nu2, nu, nu * ComplexQuad(third), f));
      } else if (st.cls.model_id == 16) {
        pts.push_back(make_point("rho", 1, 1, ComplexQuad(Rational(1, 6)), f));
      } else {
        pts.push_back(make_point("rho1", 1, 1, ComplexQuad(Rational(1, 4)), f));
        pts.push_back(make_point("rho2", -1, 1, ComplexQuad(Rational(1, 4)), f));
      }
      for (const auto& p : pts) {
        ComplexQuad t = t_on_kernel(st.p, p.coords[0].exact, p.coords[1].exact);
        if (!(t == p.coords[2].exact)) throw std::logic_error(p.name + " is not on the kernel");
        if (!is_critical(f, p)) throw std::logic_error(p.name + " fails the criticality equations");
      }
      break;
    }
    default: break;
  }
  mark_minimal(pts, f);
  for (auto& p : pts) finish_cone(f, p);
  return orient(std::move(pts), st.oriented.swapped);
}

std::vector<CriticalPoint> contributing_set(const StepSet& s) {
  Setup st = setup(s);
  const RationalFunction3& f = st.f;
  const int size = static_cast<int>(st.oriented.steps.size());
  std::vector<CriticalPoint> pts;
  auto name = [&]() { return "rho" + std::to_string(pts.size() + 1); };

  switch (st.cls.kind) {
    case ModelKind::HighlySymmetric:
      for (auto p : critical_points(st.oriented.steps)) {
        if (!p.minimal) continue;
        p.contributing = true;
        pts.push_back(p);
      }
      break;
    case ModelKind::NegativeDrift: {
      RealQuad y1 = one_symmetry_y1(st.oriented.steps);
      ComplexQuad t1 = t_on_kernel(st.p, 1, y1);
      CriticalPoint base = make_point("base", 1, y1, t1, f);
      if (!certify_minimality(base, f).certified) throw std::logic_error("negative drift smooth point is not minimal");
      for (const auto& px : unit_phases()) {
        for (const auto& py : unit_phases()) {
          ComplexQuad x = px, y = py * ComplexQuad(y1);
          ComplexQuad t = t_on_kernel(st.p, x, y);
          if (t.is_zero() || !(t.norm() == t1.norm())) continue;
          CriticalPoint p = make_point(name(), x, y, t, f);
          if (!p.smooth() || !is_critical(f, p)) continue;
          p.minimal = true;
          p.contributing = true;
          pts.push_back(p);
        }
      }
      break;
    }
    case ModelKind::PositiveDrift: {
      const RealQuad t_mod2 = Rational(1, size * size);
      CriticalPoint base = make_point("base", 1, 1, ComplexQuad(Rational(1, size)), f);
      if (!certify_minimality(base, f).certified) throw std::logic_error("positive drift stratum point is not minimal");
      for (const auto& px : unit_phases()) {
        ComplexQuad t = t_on_kernel(st.p, px, 1);
        if (t.is_zero() || !(t.norm() == t_mod2)) continue;
        CriticalPoint p = make_point(name(), px, 1, t, f);
        if (!is_critical(f, p) || !dual_cone_contains_one(stratum_geometry(f, p.point()))) continue;
        p.minimal = true;
        p.contributing = true;
        pts.push_back(p);
      }
      break;
    }
    case ModelKind::Sporadic: {
      pts = critical_points(st.oriented.steps);
      for (auto& p : pts) {
        if (!p.minimal) throw std::logic_error("sporadic point " + p.name + " is not minimal");
        p.contributing = true;
        // lower-order points: model 15's rho2, rho3 and model 23's rho2
        p.rank = (p.name == "rho1" || p.name == "rho") ? 0 : 1;
      }
      break;
    }
    default: break;
  }
  for (auto& p : pts) finish_cone(f, p);
  for (const auto& p : pts) {
    if (!same_moduli(p, pts.front())) throw std::logic_error("contributing points do not share coordinatewise moduli");
  }
  return orient(std::move(pts), st.oriented.swapped);
}

}  // namespace quadwalk
