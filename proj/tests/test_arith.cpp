#include <doctest.h>

#include <numeric>

#include "hzb/arith.hpp"
#include "hzb/errors.hpp"
#include "hzb/rational.hpp"

using namespace hzb;

TEST_CASE("checked arithmetic reports overflow instead of wrapping") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 5) == -20);
  const Int big = INT64_MAX / 2 + 1;
  CHECK_THROWS_AS(checked_add(big, big), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 4), std::overflow_error);
  CHECK_THROWS_AS(checked_neg(INT64_MIN), std::overflow_error);
}

TEST_CASE("rational normalization and exact arithmetic") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

  CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(2, 3) == Rational(-2, 3));
  CHECK(Rational(5, 3).inv() == Rational(3, 5));
  CHECK_THROWS_AS(Rational(0).inv(), std::domain_error);

  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-24, 11).str() == "-24/11");

  Rational a(INT64_MAX - 1, 1);
  CHECK_THROWS_AS(a * a, std::overflow_error);
}

TEST_CASE("egcd basics") {
  const Egcd e = egcd(12, 5);
  CHECK(e.g == 1);
  CHECK(12 * e.x + 5 * e.y == 1);

  const Egcd z = egcd(7, 0);
  CHECK(z.g == 7);
  CHECK(z.x == 1);
  CHECK(z.y == 0);

  CHECK_THROWS_AS(egcd(0, 0), std::domain_error);
}

TEST_CASE("egcd bezout identity over a range") {
  for (Int a = -40; a <= 40; ++a)
    for (Int b = -40; b <= 40; ++b) {
      if (a == 0 && b == 0) continue;
      const Egcd e = egcd(a, b);
      CHECK(e.g == std::gcd(a, b));
      CHECK(e.g >= 1);
      CHECK(a * e.x + b * e.y == e.g);
    }
}

TEST_CASE("negated modular inverse examples") {
  CHECK(mod_inverse_of_negative(5, 11) == 2);
  CHECK(mod_inverse_of_negative(11, 17) == 3);
  CHECK(mod_inverse_of_negative(7, 1) == 0);
  CHECK(mod_inverse_of_negative(3, 1) == 0);
  CHECK_THROWS_AS(mod_inverse_of_negative(4, 6), std::domain_error);
  CHECK_THROWS_AS(mod_inverse_of_negative(0, 5), std::domain_error);
  CHECK_THROWS_AS(mod_inverse_of_negative(5, 0), std::domain_error);
}

TEST_CASE("negated modular inverse agrees with exhaustive search") {
  for (Int modulus = 2; modulus <= 200; ++modulus)
    for (Int c = 1; c <= 200; ++c) {
      if (std::gcd(c, modulus) != 1) continue;
      Int expected = 0;
      int hits = 0;
      for (Int b = 1; b < modulus; ++b)
        if (((-c * b) % modulus + modulus) % modulus == 1) {
          expected = b;
          ++hits;
        }
      REQUIRE(hits == 1);
      const Int got = mod_inverse_of_negative(c, modulus);
      REQUIRE(got == expected);
      REQUIRE(got > 0);
      REQUIRE(got < modulus);
    }
}

TEST_CASE("continued fraction expansion examples") {
  CHECK(cf_expand(12, 5) == ContinuedFraction{3, 2, 3});
  CHECK(cf_expand(17, 14) == ContinuedFraction{2, 2, 2, 2, 3, 2});
  CHECK(cf_expand(1, 1) == ContinuedFraction{});
  CHECK(cf_expand(11, 9) == ContinuedFraction{2, 2, 2, 2, 3});
  CHECK(cf_expand(5, 1) == ContinuedFraction{5});
  CHECK_THROWS_AS(cf_expand(5, 7), std::domain_error);
  CHECK_THROWS_AS(cf_expand(6, 4), std::domain_error);
  CHECK_THROWS_AS(cf_expand(5, 0), std::domain_error);
}

TEST_CASE("continued fraction evaluation examples") {
  CHECK(cf_eval({3, 2, 3}) == Rational(12, 5));
  CHECK(cf_eval({2, 2, 2, 2, 3}) == Rational(11, 9));
  CHECK(cf_eval({}) == Rational(1, 1));
  CHECK_THROWS_AS(cf_eval({3, 1, 3}), std::domain_error);
}

TEST_CASE("continued fraction round trip") {
  for (Int n = 1; n <= 200; ++n)
    for (Int q = 1; q <= n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const ContinuedFraction cf = cf_expand(n, q);
      for (Int b : cf) REQUIRE(b >= 2);
      REQUIRE(cf_eval(cf) == Rational(n, q));
    }
}
