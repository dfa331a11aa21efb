#include "doctest.h"

#include "ramsey/rational.hpp"

using ramsey::Rational;

TEST_CASE("rational arithmetic stays reduced") {
    const Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(a + Rational(1, 3) == Rational(5, 6));
    CHECK(a - Rational(1, 3) == Rational(1, 6));
    CHECK(a * Rational(2, 3) == Rational(1, 3));
    CHECK(a / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(a / Rational(0));
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("1/10") == Rational(1, 10));
    CHECK(Rational::parse("0.1") == Rational(1, 10));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-2/8") == Rational(-1, 4));
    CHECK(Rational(7, 20).str() == "7/20");
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/"));
}
