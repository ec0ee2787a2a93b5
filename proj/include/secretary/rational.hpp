// rational.hpp — exact rational helpers over GMP.
#pragma once
#include <gmpxx.h>

#include <string>

namespace secretary {

using Rational = mpq_class;

// Accepts "p/q", integers and finite decimals ("0.25", "1.5e-1"). Throws
// domain_error on anything else or on a nonpositive value when positive is set.
Rational parse_rational(const std::string& text, bool positive = true);

// Shortest decimal round-trip of a double, read back exactly as a rational.
Rational rational_from_double(double x);

Rational rational_pow(const Rational& base, int e);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

}  // namespace secretary
