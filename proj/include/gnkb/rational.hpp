#pragma once

#include <gmpxx.h>

#include <string>

namespace gnkb {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form.
Rational make_rational(long num, long den = 1);

/// Parses "p/q", "p" or a terminating decimal such as "0.45".
Rational parse_rational(const std::string& text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering with exactly `significant` significant digits,
/// rounded half away from zero, never in exponent notation.
std::string to_decimal(const Rational& value, int significant = 12);

Rational pow(const Rational& base, unsigned exponent);

BigInt factorial(unsigned n);

}  // namespace gnkb
