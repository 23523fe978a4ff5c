#include <doctest.h>

#include "helpers.hpp"
#include "phin/errors.hpp"
#include "phin/sampling.hpp"

using namespace phin;
using namespace phin::test;

TEST_SUITE("field") {
  TEST_CASE("products and inverses in Q(sqrt 2)") {
    const Prime p(2);
    CHECK(in_field(p, 1, 0) * in_field(p, 0, 1) == in_field(p, 0, 1));
    CHECK(in_field(p, 0, 1).inverse() == Scalar(0, Rational(1, 2), p));
    // (a + b r)(a - b r) = a^2 - p b^2
    CHECK(in_field(p, 1, 1) * in_field(p, 1, -1) == in_field(p, -1, 0));
  }

  TEST_CASE("division by zero is invalid input") {
    const Prime p(3);
    CHECK_THROWS_AS(Scalar(0, 0, p).inverse(), InvalidInput);
    CHECK_THROWS_AS(in_field(p, 1, 1) / Scalar(0), InvalidInput);
  }

  TEST_CASE("powers of p and sqrt p") {
    const Prime two(2);
    const Prime three(3);
    CHECK(Scalar::sqrt_p(two) * Scalar::sqrt_p(two) == q(2));
    CHECK(Scalar::p_power(three, -1) == q(1, 3));
    CHECK(Scalar::p_power(two, 2) * Scalar::p_power(two, -2) == q(1));
    for (long k = -5; k <= 5; ++k) {
      CHECK(Scalar::sqrt_p_power(three, k) == Scalar::sqrt_p(three).pow(k));
      CHECK(Scalar::sqrt_p_power(three, 2 * k) == Scalar::p_power(three, k));
    }
  }

  TEST_CASE("mixing primes is rejected") {
    CHECK_THROWS_AS(Scalar::sqrt_p(Prime(2)) + Scalar::sqrt_p(Prime(3)), InvalidInput);
    CHECK_THROWS_AS(Prime(4), InvalidInput);
    CHECK_THROWS_AS(Prime(1), InvalidInput);
  }

  TEST_CASE("field axioms on random elements") {
    sampling::Rng rng(7);
    for (unsigned long pv : {2UL, 3UL, 5UL}) {
      const Prime p(pv);
      for (int i = 0; i < 100; ++i) {
        const Scalar x(sampling::rational(rng), sampling::rational(rng), p);
        const Scalar y(sampling::rational(rng), sampling::rational(rng), p);
        const Scalar z(sampling::rational(rng), sampling::rational(rng), p);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == q(1));
      }
    }
  }

  TEST_CASE("a + b sqrt p vanishes only when a = b = 0") {
    // a^2 = p b^2 has no rational solution with b != 0, so the norm of a
    // nonzero element never vanishes.
    sampling::Rng rng(11);
    const Prime p(5);
    for (int i = 0; i < 200; ++i) {
      const Rational a = sampling::rational(rng, 20);
      const Rational b = sampling::rational(rng, 20);
      const Scalar x(a, b, p);
      CHECK(x.is_zero() == (sgn(a) == 0 && sgn(b) == 0));
      if (!x.is_zero()) CHECK(sgn(x.norm()) != 0);
    }
  }

  TEST_CASE("square roots in Q(sqrt p)") {
    const Prime p(2);
    CHECK(field_sqrt(q(9, 4), p) == q(3, 2));
    CHECK(field_sqrt(q(8), p) == Scalar(0, 2, p));
    CHECK_FALSE(field_sqrt(q(3), p).has_value());
    const Scalar x = in_field(p, 1, 3);
    const auto r = field_sqrt(x * x, p);
    REQUIRE(r.has_value());
    CHECK(*r * *r == x * x);
  }

  TEST_CASE("rational text") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
    CHECK(rational_text(Rational(0)) == "0");
    CHECK(rational_text(Rational(2)) == "2");
    CHECK(rational_text(Rational(-1, 3)) == "-1/3");
  }
}
