#pragma once

#include "quadwalk/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadwalk {

// Sparse Laurent polynomial in Dim variables with exact rational coefficients.
// No zero coefficient is ever stored.
template <std::size_t Dim>
class LaurentPoly {
 public:
  using Exponent = std::array<int, Dim>;
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Exponent{}, constant);
  }
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

  static LaurentPoly monomial(const Exponent& e, const Rational& c = 1) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }
  static LaurentPoly variable(std::size_t k, int power = 1) {
    Exponent e{};
    e.at(k) = power;
    return monomial(e);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= c;
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(LaurentPoly a, int c) { return a *= Rational(c); }
  friend LaurentPoly operator*(int c, LaurentPoly a) { return a *= Rational(c); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t k = 0; k < Dim; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly result(1), base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  // Multiplication by the monomial with exponent e.
  LaurentPoly shifted(const Exponent& e) const {
    LaurentPoly r;
    for (const auto& [ex, c] : terms_) {
      Exponent f;
      for (std::size_t k = 0; k < Dim; ++k) f[k] = ex[k] + e[k];
      r.terms_.emplace(f, c);
    }
    return r;
  }

  int min_degree(std::size_t var) const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    int m = terms_.begin()->first[var];
    for (const auto& kv : terms_) m = std::min(m, kv.first[var]);
    return m;
  }
  int max_degree(std::size_t var) const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    int m = terms_.begin()->first[var];
    for (const auto& kv : terms_) m = std::max(m, kv.first[var]);
    return m;
  }
  bool is_polynomial() const {
    for (const auto& kv : terms_) {
      for (int v : kv.first) {
        if (v < 0) return false;
      }
    }
    return true;
  }

  LaurentPoly derivative(std::size_t var) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      f[var] -= 1;
      r.add_term(f, c * e[var]);
    }
    return r;
  }

  // Substitutes x_k -> x_k^{scale[k]}; scale entries are +-1 in practice.
  LaurentPoly rescaled_exponents(const std::array<int, Dim>& scale) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      Exponent f;
      for (std::size_t k = 0; k < Dim; ++k) f[k] = e[k] * scale[k];
      r.add_term(f, c);
    }
    return r;
  }

  template <class T, class FromRational>
  T evaluate(const std::array<T, Dim>& point, FromRational from_rational) const {
    std::array<std::map<int, T>, Dim> powers;
    T total = from_rational(Rational(0));
    for (const auto& [e, c] : terms_) {
      T term = from_rational(c);
      for (std::size_t k = 0; k < Dim; ++k) term = term * power_of(powers[k], point[k], e[k], from_rational);
      total = total + term;
    }
    return total;
  }

  Rational evaluate(const std::array<Rational, Dim>& point) const {
    return evaluate(point, [](const Rational& q) { return q; });
  }

  std::string to_string(const std::array<std::string, Dim>& names) const {
    if (is_zero()) return "0";
    std::string out;
    // Highest total degree first, matching the usual reading order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t k = 0; k < Dim; ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[k];
        if (e[k] != 1) mono += "^" + std::to_string(e[k]);
      }
      Rational mag = abs(c);
      std::string coeff = mag.get_str();
      bool negative = c < 0;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (mono.empty()) {
        out += coeff;
      } else if (mag == 1) {
        out += mono;
      } else {
        out += coeff + "*" + mono;
      }
    }
    return out;
  }

 private:
  template <class T, class FromRational>
  static T power_of(std::map<int, T>& cache, const T& base, int k, FromRational& from_rational) {
    if (k == 0) return from_rational(Rational(1));
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    T value;
    if (k > 0) {
      value = power_of(cache, base, k - 1, from_rational) * base;
    } else {
      value = power_of(cache, base, k + 1, from_rational) / base;
    }
    cache.emplace(k, value);
    return value;
  }

  Terms terms_;
};

using LaurentPolynomial1 = LaurentPoly<1>;
using LaurentPolynomial2 = LaurentPoly<2>;
// Variables ordered (x, y, t).
using LaurentPolynomial3 = LaurentPoly<3>;

inline const std::array<std::string, 1> kNamesX{"x"};
inline const std::array<std::string, 2> kNamesXY{"x", "y"};
inline const std::array<std::string, 3> kNamesXYT{"x", "y", "t"};

}  // namespace quadwalk
