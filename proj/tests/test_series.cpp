#include "bsf/errors.hpp"
#include "bsf/report.hpp"
#include "bsf/series.hpp"

#include <doctest.h>

using namespace bsf;

TEST_CASE("degree function specs") {
    CHECK(SeriesSpec::geometric().coefficient(7) == 1);
    CHECK(SeriesSpec::exponential().coefficient(4) == Rational(1, 24));
    const auto p = SeriesSpec::parse("poly:1,1,1");
    CHECK(p.coefficient(2) == 1);
    CHECK(p.coefficient(3) == 0);
    const auto e = SeriesSpec::parse("explicit:1,2,3");
    CHECK(e.coefficient(2) == 3);
    CHECK_THROWS_AS(e.coefficient(3), RangeError);
    CHECK_THROWS_AS(SeriesSpec::polynomial({2, 1}), ValidationError);
    CHECK_THROWS_AS(SeriesSpec::parse("bogus"), std::invalid_argument);
}

TEST_CASE("truncated series arithmetic") {
    const auto z = TruncatedSeries::variable(5);
    const auto one = TruncatedSeries::constant(1, 5);
    const auto sq = (one + z) * (one + z);
    CHECK(sq[0] == 1);
    CHECK(sq[1] == 2);
    CHECK(sq[2] == 1);
    CHECK(sq[3] == 0);
    CHECK(sq.derivative().order() == 4);
    CHECK(sq.derivative()[0] == 2);
    CHECK_THROWS_AS(sq.at(6), RangeError);
    CHECK_THROWS_AS(TruncatedSeries::constant(1, 0).derivative(), RangeError);
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Rational>{}), std::invalid_argument);
    CHECK(TruncatedSeries::zero(3).valuation() == std::nullopt);
    CHECK(z.valuation() == 1u);
    // mixed orders truncate to the smaller one
    CHECK((z + TruncatedSeries::variable(2)).order() == 2);
}

TEST_CASE("composition with degree functions") {
    const unsigned m = 8;
    const auto z = TruncatedSeries::variable(m);
    const auto geo = compose_degree_function(SeriesSpec::geometric(), z);
    const auto ex = compose_degree_function(SeriesSpec::exponential(), z);
    for (unsigned n = 0; n <= m; ++n) {
        CHECK(geo[n] == 1);
        CHECK(ex[n] == Rational(1) / Rational(factorial(n)));
    }
    // 1/(1 - 2z): independent check of the triangular solve
    const auto two_z = z * Rational(2);
    const auto g2 = compose_degree_function(SeriesSpec::geometric(), two_z);
    for (unsigned n = 0; n <= m; ++n) CHECK(g2[n] == power(2, n));
    // exp(z) exp(z) = exp(2z)
    const auto e2 = compose_degree_function(SeriesSpec::exponential(), two_z);
    CHECK(ex * ex == e2);
    // polynomial psi by Horner
    const auto p = compose_degree_function(SeriesSpec::polynomial({1, 1, 1}), z);
    CHECK(p[0] == 1);
    CHECK(p[2] == 1);
    CHECK(p[3] == 0);
    // non-polynomial psi needs Y(0) = 0
    CHECK_THROWS_AS(compose_degree_function(SeriesSpec::geometric(), z + TruncatedSeries::constant(1, m)),
                    CompositionDomainError);
}

TEST_CASE("euler operator") {
    const auto s = TruncatedSeries::from_coefficients(4, [](unsigned) { return Rational(1); });
    // (theta + 1)^2 maps a_n to (n+1)^2 a_n
    const auto r = apply_euler_polynomial(Polynomial{0, 0, 1}, s);
    for (unsigned n = 0; n <= 4; ++n) CHECK(r[n] == (n + 1) * (n + 1));
}

TEST_CASE("series comparison and json") {
    const auto a = TruncatedSeries::from_coefficients(4, [](unsigned n) { return Rational(n); });
    auto b_coeffs = std::vector<Rational>{0, 1, 2, 5, 4};
    const TruncatedSeries b(b_coeffs);
    const auto cmp = series_equal(a, b);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.mismatch_index == 3u);
    CHECK(cmp.lhs == 3);
    CHECK(cmp.rhs == 5);
    CHECK(series_equal(a, a).equal);
    CHECK(series_from_json(to_json(b)) == b);
    CHECK(to_json(Rational(-3, 4)).dump() == R"(["-3","4"])");
}
