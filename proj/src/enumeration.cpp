#include "quadwalk/enumeration.hpp"

#include "quadwalk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#if defined(__SSE__)
#include <xmmintrin.h>
#endif

namespace quadwalk {

namespace {

// Dense DP layers with a one-cell zero border on the low side, so steps
// arriving from outside the quadrant read zeros.
template <class T>
class Layers {
 public:
  explicit Layers(int n_max) : width_(n_max + 3), buf_{std::vector<T>(sz()), std::vector<T>(sz())} {
    buf_[0][idx(0, 0)] = T(1);
  }

  T* row(int b, int i) { return buf_[b].data() + idx(i, 0); }
  const T& at(int b, int i, int j) const { return buf_[b][idx(i, j)]; }

  // Extent of possibly nonzero cells in each buffer.
  int rows[2] = {0, 0};
  int cols[2] = {0, 0};

  void clear_outside(int b, int r, int c) {
    for (int i = 0; i <= rows[b]; ++i) {
      T* p = row(b, i);
      int from = i > r ? 0 : c + 1;
      for (int j = from; j <= cols[b]; ++j) p[j] = T(0);
    }
  }

 private:
  std::size_t sz() const { return static_cast<std::size_t>(width_) * static_cast<std::size_t>(width_); }
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i + 1) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(j + 1);
  }
  int width_;
  std::vector<T> buf_[2];
};

bool is_zero(double v) { return v == 0.0; }
bool is_zero(const Integer& v) { return v == 0; }

template <class T>
struct LayerSums {
  T anywhere{0}, x_axis{0}, y_axis{0}, origin{0};
};

// Runs the DP; `visit(n, layers, buffer)` is called after each layer is final.
template <class T, class Scale, class Visit>
void run_dp(const StepSet& s, int n_max, Scale scale, Visit visit) {
  Layers<T> L(n_max);
  // Steps grouped by dx: row i of the new layer reads row i - dx of the old one.
  std::vector<int> dys[3];
  for (Step st : s.steps()) dys[st.dx + 1].push_back(st.dy);
  bool grows_x = !dys[2].empty();
  bool grows_y = std::any_of(s.steps().begin(), s.steps().end(), [](Step st) { return st.dy > 0; });

  visit(0, L, 0);
  int cur = 0;
  for (int n = 1; n <= n_max; ++n) {
    int nxt = 1 - cur;
    int r = std::min(L.rows[cur] + (grows_x ? 1 : 0), n_max);
    int c = std::min(L.cols[cur] + (grows_y ? 1 : 0), n_max);
    L.clear_outside(nxt, r, c);
    for (int i = 0; i <= r; ++i) {
      T* dst = L.row(nxt, i);
      for (int j = 0; j <= c; ++j) dst[j] = T(0);
      for (int g = 0; g < 3; ++g) {
        int src_row = i - (g - 1);
        if (src_row > L.rows[cur] || dys[g].empty()) continue;
        const T* src = L.row(cur, src_row);
        for (int dy : dys[g]) {
          const T* sp = src - dy;
          for (int j = 0; j <= c; ++j) dst[j] += sp[j];
        }
      }
      scale(dst, c + 1);
    }
    // Trim trailing zero rows and columns.
    auto row_zero = [&](int i) {
      const T* p = L.row(nxt, i);
      for (int j = 0; j <= c; ++j) {
        if (!is_zero(p[j])) return false;
      }
      return true;
    };
    while (r > 0 && row_zero(r)) --r;
    auto col_zero = [&](int j) {
      for (int i = 0; i <= r; ++i) {
        if (!is_zero(L.row(nxt, i)[j])) return false;
      }
      return true;
    };
    while (c > 0 && col_zero(c)) --c;
    L.rows[nxt] = r;
    L.cols[nxt] = c;
    cur = nxt;
    visit(n, L, cur);
  }
}

template <class T>
LayerSums<T> sums(Layers<T>& L, int b) {
  LayerSums<T> out;
  for (int i = 0; i <= L.rows[b]; ++i) {
    const T* p = L.row(b, i);
    T row_total{0};
    for (int j = 0; j <= L.cols[b]; ++j) row_total += p[j];
    out.anywhere += row_total;
    out.x_axis += p[0];
    if (i == 0) out.y_axis = row_total;
  }
  out.origin = L.at(b, 0, 0);
  return out;
}

class FlushDenormals {
 public:
  FlushDenormals() {
#if defined(__SSE__)
    saved_ = _mm_getcsr();
    _mm_setcsr(saved_ | 0x8040U);
#endif
  }
  ~FlushDenormals() {
#if defined(__SSE__)
    _mm_setcsr(saved_);
#endif
  }
  FlushDenormals(const FlushDenormals&) = delete;
  FlushDenormals& operator=(const FlushDenormals&) = delete;

 private:
  unsigned saved_ = 0;
};

}  // namespace

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Anywhere: return "anywhere";
    case Flavor::XAxis: return "x_axis";
    case Flavor::YAxis: return "y_axis";
    case Flavor::Origin: return "origin";
  }
  return "?";
}

Flavor parse_flavor(const std::string& text) {
  for (Flavor f : {Flavor::Anywhere, Flavor::XAxis, Flavor::YAxis, Flavor::Origin}) {
    if (text == to_string(f)) return f;
  }
  throw ParseError("unknown flavor '" + text + "' (expected anywhere, x_axis, y_axis or origin)");
}

Flavor swap_flavor(Flavor f) {
  if (f == Flavor::XAxis) return Flavor::YAxis;
  if (f == Flavor::YAxis) return Flavor::XAxis;
  return f;
}

OccupancyGrid::OccupancyGrid(int n)
    : n_(n), counts_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1)) {}

const Integer& OccupancyGrid::at(int i, int j) const {
  return counts_.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j));
}

Integer& OccupancyGrid::at(int i, int j) {
  return counts_.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j));
}

ExactCounts count_exact(const StepSet& s, int n_max, const CountOptions& options) {
  if (n_max < 0) throw std::invalid_argument("N must be non-negative");
  if (n_max > options.max_exact_n) {
    throw ResourceLimit("exact enumeration to N=" + std::to_string(n_max) + " exceeds the cap " +
                        std::to_string(options.max_exact_n));
  }
  ExactCounts out;
  auto no_scale = [](Integer*, int) {};
  run_dp<Integer>(s, n_max, no_scale, [&](int n, Layers<Integer>& L, int b) {
    LayerSums<Integer> t = sums(L, b);
    out.sequences.anywhere.push_back(t.anywhere);
    out.sequences.x_axis.push_back(t.x_axis);
    out.sequences.y_axis.push_back(t.y_axis);
    out.sequences.origin.push_back(t.origin);
    if (options.keep_grids) {
      OccupancyGrid g(n);
      for (int i = 0; i <= std::min(L.rows[b], n); ++i) {
        for (int j = 0; j <= std::min(L.cols[b], n); ++j) g.at(i, j) = L.at(b, i, j);
      }
      out.grids.push_back(std::move(g));
    }
  });
  return out;
}

ScaledCounts count_scaled(const StepSet& s, int n_max, double rho, const CountOptions& options) {
  if (n_max < 0) throw std::invalid_argument("N must be non-negative");
  if (!(rho > 0) || !std::isfinite(rho)) throw std::invalid_argument("scale must be a positive finite number");
  if (n_max > options.max_scaled_n) {
    throw ResourceLimit("scaled enumeration to N=" + std::to_string(n_max) + " exceeds the cap " +
                        std::to_string(options.max_scaled_n));
  }
  FlushDenormals ftz;
  ScaledCounts out;
  out.scale = rho;
  std::ostringstream label;
  label.precision(17);
  label << rho;
  out.scale_label = label.str();
  const double inv = 1.0 / rho;
  auto scale = [inv](double* row, int len) {
    for (int j = 0; j < len; ++j) row[j] *= inv;
  };
  run_dp<double>(s, n_max, scale, [&](int n, Layers<double>& L, int b) {
    LayerSums<double> t = sums(L, b);
    if (!std::isfinite(t.anywhere)) {
      throw ResourceLimit("scaled counts overflowed at n=" + std::to_string(n) + "; scale too small");
    }
    if (t.anywhere < 1e-280) out.underflow_warning = true;
    out.sequences.anywhere.push_back(t.anywhere);
    out.sequences.x_axis.push_back(t.x_axis);
    out.sequences.y_axis.push_back(t.y_axis);
    out.sequences.origin.push_back(t.origin);
  });
  return out;
}

ScaledCounts count_scaled(const StepSet& s, int n_max, const Rational& rho, const CountOptions& options) {
  if (rho <= 0) throw std::invalid_argument("scale must be positive");
  ScaledCounts out = count_scaled(s, n_max, rho.get_d(), options);
  out.scale_label = rho.get_str();
  return out;
}

FunctionalEquationCheck check_functional_equation(const StepSet& s, int n_max) {
  return check_functional_equation(s, s, n_max);
}

FunctionalEquationCheck check_functional_equation(const StepSet& counted, const StepSet& equation, int n_max) {
  ExactCounts ec = count_exact(counted, n_max);
  Sections sec = sections(equation);
  LaurentPolynomial2 S = characteristic_polynomial(equation);
  LaurentPolynomial2 xy = LaurentPolynomial2::monomial({1, 1});
  LaurentPolynomial2 yB, xA;
  for (const auto& [e, c] : sec.b_minus.terms()) yB.add_term({0, e[0] + 1}, c);
  for (const auto& [e, c] : sec.a_minus.terms()) xA.add_term({e[0] + 1, 0}, c);
  bool eps = equation.contains({-1, -1});

  auto as_poly = [](const OccupancyGrid& g) {
    LaurentPolynomial2 p;
    for (int i = 0; i <= g.length(); ++i) {
      for (int j = 0; j <= g.length(); ++j) p.add_term({i, j}, Rational(g.at(i, j)));
    }
    return p;
  };
  auto on_y_axis = [](const OccupancyGrid& g) {
    LaurentPolynomial2 p;
    for (int j = 0; j <= g.length(); ++j) p.add_term({0, j}, Rational(g.at(0, j)));
    return p;
  };
  auto on_x_axis = [](const OccupancyGrid& g) {
    LaurentPolynomial2 p;
    for (int i = 0; i <= g.length(); ++i) p.add_term({i, 0}, Rational(g.at(i, 0)));
    return p;
  };

  FunctionalEquationCheck result;
  LaurentPolynomial2 prev;
  for (int n = 0; n <= n_max; ++n) {
    LaurentPolynomial2 cur = as_poly(ec.grids[static_cast<std::size_t>(n)]);
    LaurentPolynomial2 lhs = xy * cur;
    LaurentPolynomial2 rhs;
    if (n == 0) {
      rhs = xy;
    } else {
      const OccupancyGrid& g = ec.grids[static_cast<std::size_t>(n - 1)];
      lhs -= xy * S * prev;
      rhs -= yB * on_y_axis(g);
      rhs -= xA * on_x_axis(g);
      if (eps) rhs += LaurentPolynomial2(Rational(g.at(0, 0)));
    }
    LaurentPolynomial2 diff = lhs - rhs;
    if (!diff.is_zero()) {
      const auto& [e, c] = *diff.terms().begin();
      result.holds = false;
      result.n = n;
      result.i = e[0];
      result.j = e[1];
      result.lhs = lhs.coefficient(e);
      result.rhs = rhs.coefficient(e);
      return result;
    }
    prev = std::move(cur);
  }
  return result;
}

namespace {

template <class T, class Fmt>
std::string csv_body(const BoundarySeq<T>& s, Fmt fmt) {
  std::ostringstream out;
  out << "n,anywhere,x_axis,y_axis,origin\n";
  for (std::size_t n = 0; n < s.anywhere.size(); ++n) {
    out << n << ',' << fmt(s.anywhere[n]) << ',' << fmt(s.x_axis[n]) << ',' << fmt(s.y_axis[n]) << ','
        << fmt(s.origin[n]) << '\n';
  }
  return out.str();
}

}  // namespace

std::string sequences_csv(const BoundarySequences& s) {
  return csv_body(s, [](const Integer& v) { return v.get_str(); });
}

std::string sequences_csv(const ScaledCounts& s) {
  std::string header = "# scale rho = " + s.scale_label + "; entries are c_n / rho^n\n";
  return header + csv_body(s.sequences, [](double v) {
           std::ostringstream o;
           o.precision(17);
           o << v;
           return o.str();
         });
}

}  // namespace quadwalk
