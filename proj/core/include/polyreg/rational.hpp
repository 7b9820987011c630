#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyreg {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Parses `p` or `p/q` with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

Rational binomial(unsigned n, unsigned k);

/// n! / (n-k)!
Rational falling_factorial(unsigned n, unsigned k);

Rational factorial(unsigned n);

}  // namespace polyreg
