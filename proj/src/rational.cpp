#include "quadwalk/rational.hpp"

#include <stdexcept>

namespace quadwalk {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a rational number: " + std::string(text));
  }
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& base, int exponent) {
  Rational result = 1;
  Rational b = base;
  if (exponent < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    b = 1 / b;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace quadwalk
