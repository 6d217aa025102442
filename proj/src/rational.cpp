#include "resumkit/rational.hpp"

#include <stdexcept>

namespace resumkit {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt odd_double_factorial(int n) {
  if (n < -1 || n % 2 == 0) throw std::invalid_argument("odd_double_factorial: need odd n >= -1");
  BigInt r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

std::string fraction_str(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

// Decimal only; leading zeros stripped so BigInt never sees an octal prefix.
BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
    throw std::runtime_error("not a decimal integer");
  s.remove_prefix(std::min(s.find_first_not_of('0'), s.size() - 1));
  const BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_fraction(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("parse_fraction: empty string");
  const auto slash = s.find('/');
  try {
    if (slash != std::string_view::npos) {
      const BigInt num = parse_integer(s.substr(0, slash));
      const BigInt den = parse_integer(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("parse_fraction: zero denominator");
      return Rational(num, den);
    }
    const auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(parse_integer(s));
    const std::string digits =
        std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    const std::size_t places = s.size() - dot - 1;
    if (places == 0 || digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("parse_fraction: malformed decimal");
    BigInt den = 1;
    for (std::size_t k = 0; k < places; ++k) den *= 10;
    return Rational(parse_integer(digits), den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_fraction: cannot parse '" + std::string(s) + "'");
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace resumkit
