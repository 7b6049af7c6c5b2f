#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace torusrep {

using Integer = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational. Always stored canonically
// (reduced, positive denominator); equality is exact.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (decimal-free). Throws std::invalid_argument
// on anything else, including q = 0.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

bool is_integer(const Rational& value);

// Representative of value mod 1 in [0, 1).
Rational mod_one(const Rational& value);

// 2^-exponent, exponent >= 0.
Rational dyadic_power(unsigned exponent);

}  // namespace torusrep
