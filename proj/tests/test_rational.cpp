#include "bsf/polynomial.hpp"
#include "bsf/rational.hpp"

#include <doctest.h>

using namespace bsf;

TEST_CASE("parse and print rationals") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(parse_rational(" 0.25 ") == Rational(1, 4));
    CHECK(parse_rational("+7/3") == Rational(7, 3));
    CHECK(to_string(Rational(-4, 6)) == "-2/3");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    // 30! overflows 64 bits
    CHECK(factorial(30).str() == "265252859812191058636308480000000");
}

TEST_CASE("polynomial arithmetic and integration") {
    const Polynomial u{0, 1};
    const Polynomial one{1};
    CHECK((u * u)(Rational(3)) == 9);
    CHECK(u.antiderivative() == Polynomial{0, 0, Rational(1, 2)});
    CHECK((u * u).integral_unit() == Rational(1, 3));
    CHECK(u.reflect() == one - u);
    CHECK((u - u).is_zero());
    CHECK((u - u).degree() == -1);
    CHECK(parse_polynomial("0,0,1") == u * u);
    CHECK(Polynomial{1, 2}.to_string("z") == "2 z + 1");
}
