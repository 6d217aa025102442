#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace resumkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

/// n!! for odd n, with (-1)!! = 1.
BigInt odd_double_factorial(int n);

/// Renders "num/den", or just "num" when the denominator is 1.
std::string fraction_str(const Rational& q);

/// Accepts "a/b", "a", and finite decimals such as "0.25" or "-1.5".
Rational parse_fraction(std::string_view s);

double to_double(const Rational& q);

}  // namespace resumkit
