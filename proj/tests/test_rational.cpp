#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "proxim/rational.hpp"

using proxim::Rational;

TEST_CASE("rational: lowest terms and sign normalisation") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(3, -4).numerator() == -3);
  CHECK(Rational(3, -4).denominator() == 4);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(0, -7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational: arithmetic and ordering") {
  const Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(b < a);
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(proxim::abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK_THROWS(a / Rational(0));

  Rational acc;
  for (int i = 1; i <= 10; ++i) acc += Rational(1, i * (i + 1));
  CHECK(acc == Rational(10, 11)); // telescoping
}

TEST_CASE("rational: floor, ceil and rendering") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(4).ceil() == 4);
  CHECK(Rational(13, 2).str() == "13/2");
  CHECK(Rational(-3).str() == "-3");
  CHECK(Rational(1, 3).decimal(4) == "0.3333");
  CHECK(Rational(5, 2).is_integer() == false);
}

TEST_CASE("rational: wide intermediates, overflow detection") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
  // Cancels back into range only thanks to 128-bit intermediates.
  CHECK(Rational(big, 3) * Rational(3, big) == Rational(1));
  CHECK_THROWS_AS(Rational(big) * Rational(big), std::overflow_error);
}
