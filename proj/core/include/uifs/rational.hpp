#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace uifs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// p^e for any integer exponent (e may be negative).
Rational rational_pow(unsigned base, int exponent);

// Parses "num/den" or a plain integer (optional leading '-').
Rational parse_rational(std::string_view text);

// "num/den", or just "num" when the denominator is 1.
std::string format_rational(const Rational& q);

} // namespace uifs
