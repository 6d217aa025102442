#include <doctest.h>

#include "resumkit/rational.hpp"

using namespace resumkit;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(25) == BigInt("15511210043330985984000000"));
}

TEST_CASE("odd double factorial") {
  CHECK(odd_double_factorial(-1) == 1);
  CHECK(odd_double_factorial(1) == 1);
  CHECK(odd_double_factorial(3) == 3);
  CHECK(odd_double_factorial(7) == 105);
  CHECK(odd_double_factorial(11) == 10395);
  CHECK_THROWS_AS(odd_double_factorial(4), std::invalid_argument);
  CHECK_THROWS_AS(odd_double_factorial(-3), std::invalid_argument);
}

TEST_CASE("fraction rendering") {
  CHECK(fraction_str(Rational(1, 15)) == "1/15");
  CHECK(fraction_str(Rational(11, 120)) == "11/120");
  CHECK(fraction_str(Rational(-3, 2)) == "-3/2");
  CHECK(fraction_str(Rational(4)) == "4");
  CHECK(fraction_str(Rational(0)) == "0");
  CHECK(fraction_str(Rational(6, 3)) == "2");
}

TEST_CASE("fraction parsing") {
  CHECK(parse_fraction("11/120") == Rational(11, 120));
  CHECK(parse_fraction("-3/2") == Rational(-3, 2));
  CHECK(parse_fraction("7") == 7);
  CHECK(parse_fraction("0.25") == Rational(1, 4));
  CHECK(parse_fraction("-1.5") == Rational(-3, 2));
  CHECK(parse_fraction("0.8") == Rational(4, 5));

  for (const Rational q : {Rational(1, 15), Rational(-66, 720), Rational(12)})
    CHECK(parse_fraction(fraction_str(q)) == q);

  CHECK_THROWS_AS(parse_fraction(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("1."), std::invalid_argument);
}

TEST_CASE("to_double") {
  CHECK(to_double(Rational(1, 2)) == 0.5);
  CHECK(to_double(Rational(-11, 120)) == doctest::Approx(-0.0916666666667));
}
