#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace rig {

// All probability arithmetic in this library is exact. Integer/Rational are
// arbitrary precision; Rational is kept in lowest terms with a positive
// denominator by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer ipow(const Integer& base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);

// H_m = 1 + 1/2 + ... + 1/m (H_0 = 0).
Rational harmonic(unsigned m);

// Accepts "a/b", an integer, or a plain decimal literal ("0.25" -> 1/4,
// taken digit for digit; no exponent notation). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// "3/32", or "6" when the denominator is 1.
std::string to_fraction_string(const Rational& v);

// Fixed-point rendering with exactly `significant` significant digits,
// e.g. 1/4 -> "0.250000000000". Exact (no floating point), so output is
// byte-stable. Rounds half away from zero.
std::string to_decimal_string(const Rational& v, int significant = 12);
std::string to_decimal_string(double v, int significant = 12);

}  // namespace rig
