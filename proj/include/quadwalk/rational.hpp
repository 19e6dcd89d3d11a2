#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quadwalk {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

Rational rational_pow(const Rational& base, int exponent);

}  // namespace quadwalk
