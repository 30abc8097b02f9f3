#include "bsf/bare.hpp"
#include "bsf/errors.hpp"

#include <doctest.h>

#include <random>

using namespace bsf;

namespace {

Rational catalan(unsigned n) { return Rational(binomial(2 * n, n)) / (n + 1); }

std::vector<Rational> random_weights(std::mt19937& rng, unsigned k) {
    std::uniform_int_distribution<int> num(-5, 9), den(1, 7);
    std::vector<Rational> w;
    for (unsigned i = 0; i < k; ++i) w.emplace_back(num(rng), den(rng));
    return w;
}

}  // namespace

TEST_CASE("bare weights") {
    const auto m = BareWeights::master(Polynomial{1, 1}, 6);
    CHECK(m.weight(3) == Rational(4, 3));
    CHECK_THROWS_AS(m.weight(0), RangeError);
    CHECK_THROWS_AS(m.weight(7), RangeError);
    CHECK(BareWeights::inverse_factorial_power(1, 5).weight(4) == Rational(1, 16));
    CHECK(BareWeights::geometric(Rational(1, 2), 5).weight(3) == Rational(1, 8));
    CHECK(BareWeights::parse("explicit:1,2,3", 0).weight(3) == 3);
    CHECK(BareWeights::parse("one", 4).weight(4) == 1);
    CHECK(m.perturbed(2, 1).weight(2) == m.weight(2) + 1);
    CHECK(m.perturbed(2, 1).weight(3) == m.weight(3));
    CHECK_THROWS_AS(BareWeights::parse("nonsense", 3), std::invalid_argument);
}

TEST_CASE("bare value of a tree") {
    // B(t) = 1/t! when B_k = 1/k
    const auto w = BareWeights::inverse_factorial_power(0, 8);
    for (const auto& t : enumerate_plane_trees(6))
        CHECK(bare_value(t, w) == Rational(1) / Rational(tree_factorial(t)));
    CHECK_THROWS_AS(bare_value(PlaneTree::from_encoding("((()))"), BareWeights::parse("one", 2)), RangeError);
}

TEST_CASE("Catalan numbers for unit weights and geometric psi") {
    const auto y = generating_coefficients(BareWeights::parse("one", 8), SeriesSpec::geometric(), 8);
    CHECK(y[0] == 0);
    for (unsigned n = 1; n <= 8; ++n) CHECK(y[n] == catalan(n - 1));
}

TEST_CASE("sum of alpha / t! over shapes") {
    for (unsigned n = 1; n <= 10; ++n) {
        Rational sum = 0;
        for (const auto& s : enumerate_rooted_shapes(n)) sum += Rational(alpha_count(s)) / Rational(tree_factorial(s));
        CHECK(sum == Rational(factorial(n - 1)) / power(2, n - 1));
    }
}

TEST_CASE("inverse tree factorial squared with exponential psi") {
    const auto y = generating_coefficients(BareWeights::inverse_factorial_power(1, 8), SeriesSpec::exponential(), 8);
    for (unsigned n = 1; n <= 8; ++n) CHECK(y[n] == Rational(1) / (n * power(2, n - 1)));
}

TEST_CASE("fast recursion agrees with enumeration") {
    std::mt19937 rng(11);
    const std::vector<SeriesSpec> psis{SeriesSpec::geometric(), SeriesSpec::exponential(),
                                       SeriesSpec::polynomial({1, 0, 3}), SeriesSpec::explicit_coefficients({1, 2, -1, 4, 0, 5, 1, 1})};
    for (const auto& psi : psis) {
        const auto b = BareWeights::explicit_list(random_weights(rng, 8));
        const auto fast = generating_coefficients(b, psi, 8);
        const auto brute = generating_series_bruteforce(b, psi, 8);
        CHECK(fast == brute);
        for (unsigned n = 1; n <= 7; ++n) CHECK(bseries_coefficient_rooted(b, psi, n) == fast[n]);
    }
    const auto g = BareWeights::geometric(Rational(1, 2), 6);
    CHECK(generating_coefficients(g, SeriesSpec::geometric(), 6) == generating_series_bruteforce(g, SeriesSpec::geometric(), 6));
}

TEST_CASE("master differential equation") {
    for (const auto& l : {Polynomial{0, 1}, Polynomial{1}, Polynomial{0, 0, 1}, Polynomial{2, -1, 3}}) {
        for (const auto& psi : {SeriesSpec::geometric(), SeriesSpec::exponential(), SeriesSpec::polynomial({1, 1, 1})}) {
            const auto r = verify_master_ode(l, psi, 8);
            CHECK(r.exact());
        }
    }
}

TEST_CASE("negative control localizes the perturbed weight") {
    const Polynomial l{0, 1};
    for (unsigned k = 1; k <= 8; ++k) {
        const auto w = BareWeights::master(l, 8).perturbed(k, 1);
        const auto r = verify_master_ode(l, SeriesSpec::geometric(), 8, w);
        REQUIRE_FALSE(r.exact());
        CHECK(r.first_mismatch->n == k);
    }
}

TEST_CASE("inverse tree factorial powers") {
    for (unsigned l = 0; l <= 3; ++l)
        for (const auto& psi : {SeriesSpec::geometric(), SeriesSpec::exponential()})
            CHECK(verify_inverse_factorial_ode(l, psi, 8).exact());
    const auto r = verify_inverse_factorial_ode(1, SeriesSpec::geometric(), 8);
    CHECK(r.details.contains("second_order_form"));
}

TEST_CASE("identities report") {
    const auto r = verify_identities(8);
    CHECK(r.exact());
}
