#pragma once

#include <gmpxx.h>

#include <string>

namespace floorlab {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonical rational p/q with q > 0 and gcd(|p|, q) = 1. Throws on q = 0.
Rational make_rational(const Int& num, const Int& den);

/// Floor of a rational, exact (rounds toward minus infinity).
Int floor_rational(const Rational& q);
Int ceil_rational(const Rational& q);

Int pow_int(const Int& base, unsigned long e);
Rational pow_rational(const Rational& base, unsigned long e);

bool is_integer(const Rational& q);

/// "p" when q is an integer, otherwise "p/q".
std::string rational_to_string(const Rational& q);

/// Accepts "p", "p/q" or "-p/q"; anything else throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Fixed-notation decimal rendering with the given number of significant
/// digits (round to nearest). Used for orbit dumps and reports.
std::string decimal_string(const Rational& value, int significant_digits);

/// Nearest double, good enough for diagnostics and plots.
double to_double(const Rational& value);

}  // namespace floorlab
