#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "xlag/rational.hpp"

using xlag::Rational;

TEST_CASE("construction reduces to canonical form") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("from_string accepts p and p/q") {
    CHECK(Rational::from_string("3/2") == Rational(3, 2));
    CHECK(Rational::from_string("-7/3") == Rational(-7, 3));
    CHECK(Rational::from_string("4") == Rational(4));
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 2), b(1, 3);
    CHECK((a + b) == Rational(5, 6));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 6));
    CHECK((a / b) == Rational(3, 2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK((-a) == Rational(-1, 2));
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));

    // no drift over many operations
    Rational s(0);
    for (long k = 1; k <= 200; ++k) s += Rational(1, k) - Rational(1, k + 1);
    CHECK(s == Rational(200, 201));
}

TEST_CASE("ordering and predicates") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 7).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-5).sign() == -1);
    CHECK(xlag::half_odd(3) == Rational(3, 2));
}

TEST_CASE("double conversions") {
    CHECK(Rational(3, 2).to_double() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(Rational::from_double(0.25) == Rational(1, 4));
    CHECK(Rational::from_double(-1.5) == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::from_double(1.0 / 0.0), std::invalid_argument);
}
