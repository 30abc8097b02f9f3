// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "bsf/bare.hpp"
#include "bsf/bijections.hpp"
#include "bsf/triangular.hpp"
#include "bsf/wigner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace bsf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Rational catalan(unsigned n) { return Rational(binomial(2 * n, n)) / (n + 1); }

Rational double_factorial_over_factorial(unsigned k) {
    Integer df = 1;
    for (unsigned j = 1; j < 2 * k; j += 2) df *= j;
    return Rational(df) / Rational(factorial(k));
}

std::string first_failure(const VerificationReport& r) {
    if (r.exact()) return "";
    std::ostringstream s;
    s << r.statement << " " << r.parameters.dump() << " first mismatch n=" << r.first_mismatch->n
      << " lhs=" << to_string(r.first_mismatch->lhs) << " rhs=" << to_string(r.first_mismatch->rhs);
    return s.str();
}

CovarianceSpec random_table(std::mt19937& rng, unsigned lags) {
    std::uniform_int_distribution<int> den(1, 12);
    std::vector<Rational> r{1};
    for (unsigned m = 1; m <= lags; ++m) {
        const int d = den(rng);
        r.emplace_back(std::uniform_int_distribution<int>(-d, d)(rng), d);
    }
    return CovarianceSpec::table(std::move(r), Rational(std::uniform_int_distribution<int>(1, 5)(rng), 3));
}

Outcome criterion_identities() {
    const auto start = Clock::now();
    const auto r = verify_identities(8);
    const double t = seconds_since(start);
    const auto checks = r.details["identity_checks"].get<unsigned long>();
    const auto shapes_at_8 = r.details["counts"][7]["shapes"].get<unsigned long>();
    Outcome o;
    o.pass = r.exact() && checks < 1000 && t < 1.0;
    o.detail = std::to_string(checks) + " identity checks, " + std::to_string(shapes_at_8) + " shapes at n = 8, " +
               std::to_string(t) + " s" + (r.exact() ? "" : "; " + first_failure(r));
    return o;
}

Outcome criterion_catalan() {
    const auto y = generating_coefficients(BareWeights::parse("one", 8), SeriesSpec::geometric(), 8);
    const auto brute = generating_series_bruteforce(BareWeights::parse("one", 8), SeriesSpec::geometric(), 8);
    Outcome o;
    std::string values;
    for (unsigned n = 1; n <= 8; ++n) {
        o.pass = o.pass && y[n] == catalan(n - 1) && brute[n] == y[n];
        values += (n > 1 ? "," : "") + to_string(y[n]);
    }
    o.detail = "a_1..a_8 = " + values;
    return o;
}

Outcome criterion_m2() {
    Outcome o;
    Rational at3;
    for (unsigned n = 1; n <= 10; ++n) {
        Rational sum = 0;
        for (const auto& s : enumerate_rooted_shapes(n)) sum += Rational(alpha_count(s)) / Rational(tree_factorial(s));
        if (n == 3) at3 = sum;
        o.pass = o.pass && sum == Rational(factorial(n - 1)) / power(2, n - 1);
    }
    o.pass = o.pass && at3 == Rational(1, 2);
    o.detail = "n <= 10 exact, value at n = 3: " + to_string(at3);
    return o;
}

const std::vector<Polynomial> kMasterLs{Polynomial{0, 1}, Polynomial{1}, Polynomial{0, 0, 1}};
const std::vector<SeriesSpec> kMasterPsis{SeriesSpec::geometric(), SeriesSpec::exponential(),
                                          SeriesSpec::polynomial({1, 1, 1})};

Outcome criterion_master_ode() {
    const auto start = Clock::now();
    Outcome o;
    unsigned runs = 0;
    for (const auto& l : kMasterLs)
        for (const auto& psi : kMasterPsis) {
            const auto r = verify_master_ode(l, psi, 10, std::nullopt, 10);
            ++runs;
            if (!r.exact()) {
                o.pass = false;
                o.detail += first_failure(r) + "; ";
            }
        }
    const double t = seconds_since(start);
    o.pass = o.pass && t < 30.0;
    o.detail += std::to_string(runs) + " (L, psi) pairs to order 10 at cap 10, " + std::to_string(t) + " s";
    return o;
}

Outcome criterion_inversion() {
    Outcome o;
    for (unsigned l : {0u, 1u, 2u})
        for (const auto& psi : {SeriesSpec::geometric(), SeriesSpec::exponential()}) {
            const auto r = verify_inverse_factorial_ode(l, psi, 10, 10);
            if (!r.exact()) {
                o.pass = false;
                o.detail += first_failure(r) + "; ";
            }
        }
    o.detail += "l in {0,1,2} x psi in {geometric, exponential}, order 10";
    return o;
}

Outcome criterion_special_bare() {
    std::mt19937 rng(20240611);
    std::vector<CovarianceSpec> covs{CovarianceSpec::inverse_linear(2), random_table(rng, 15), random_table(rng, 15)};
    Outcome o;
    unsigned long trees = 0;
    for (const auto& cov : covs) {
        const auto r = verify_special_bare(8, cov);
        trees += r.details["trees_checked"].get<unsigned long>();
        if (!r.exact()) {
            o.pass = false;
            o.detail += first_failure(r) + "; ";
        }
    }
    o.detail += std::to_string(trees) + " tree checks over inverse-linear and two random tables";
    return o;
}

Outcome criterion_fond_lemma() {
    const auto delta = DiagonalLaw::point_mass_one();
    const auto one = CovarianceSpec::constant_one(1);
    const auto tf = CovarianceSpec::inverse_linear(2);
    const std::vector<std::pair<CovarianceSpec, DiagonalLaw>> cases{
        {one, delta}, {tf, delta}, {one, DiagonalLaw::parse("1/2:1/2,3/2:1/2")}};
    Outcome o;
    for (const auto& [cov, law] : cases) {
        const auto r = verify_fond_lemma(cov, law, 8);
        if (!r.exact()) {
            o.pass = false;
            o.detail += first_failure(r) + "; ";
        }
    }
    bool oracles = true;
    for (unsigned k = 1; k <= 6; ++k) oracles = oracles && limit_trace_combinatorial(k, tf, delta) == double_factorial_over_factorial(k);
    for (unsigned k = 1; k <= 8; ++k) oracles = oracles && limit_trace_combinatorial(k, one, delta) == catalan(k);
    o.pass = o.pass && oracles;
    o.detail += "3 (cov, mu) pairs to order 8; limits vs (2k-1)!!/k! and C_k " + std::string(oracles ? "match" : "DIFFER");
    return o;
}

Outcome criterion_wigner() {
    const auto start = Clock::now();
    const unsigned n = 200, trials = 400;
    const std::uint64_t seed = 7;
    const auto delta = DiagonalLaw::point_mass_one();
    const std::vector<std::pair<std::string, CovarianceSpec>> covs{{"constant", CovarianceSpec::constant_one(1)},
                                                                   {"inverse-linear", CovarianceSpec::inverse_linear(2)}};
    Outcome o;
    std::ostringstream detail;
    for (const auto& [name, cov] : covs) {
        for (unsigned k = 1; k <= 6; ++k) {
            const auto cmp = compare_sim_limit(k, cov, delta, n, trials, seed);
            const double se = cmp.estimate.standard_error;
            const double err = std::abs(cmp.estimate.mean - cmp.exact_value);
            const bool ok = k % 2 == 0 ? err <= 3 * se + 8.0 / n : std::abs(cmp.estimate.mean) <= 4 * se;
            o.pass = o.pass && ok;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s k=%u %.4f+-%.4f vs %s%s; ", name.c_str(), k, cmp.estimate.mean, se,
                          to_string(cmp.exact).c_str(), ok ? "" : " FAIL");
            detail << buf;
        }
    }
    const double t = seconds_since(start);
    o.pass = o.pass && t < 120.0;
    detail << "N=" << n << " trials=" << trials << " seed=" << seed << ", " << t << " s";
    o.detail = detail.str();
    return o;
}

Outcome criterion_dk8_moments() {
    const auto start = Clock::now();
    const auto r = verify_dk8_closed_form(7);
    const bool small = dh_moment(1) == Rational(1, 2) && dh_moment(2) == Rational(2, 3) && dh_moment(3) == Rational(9, 8);
    const double t = seconds_since(start);
    Outcome o;
    o.pass = r.exact() && small && t < 30.0;
    o.detail = "n <= 7, x-start = y-start, tau values 1/2, 2/3, 9/8 at n = 1,2,3 " + std::string(small ? "match" : "DIFFER") +
               ", " + std::to_string(t) + " s" + (r.exact() ? "" : "; " + first_failure(r));
    return o;
}

Outcome criterion_dk8_inversion() {
    const auto r = verify_dk8_inversion(10);
    Outcome o;
    o.pass = r.exact() && r.details["tree_function_match"].get<bool>();
    o.detail = "G(s/(1-Y0)) = s to order 10, L = sum n^(n-1) s^n / n!" + (r.exact() ? "" : "; " + first_failure(r));
    return o;
}

Outcome criterion_bijections() {
    Outcome o;
    unsigned long instances = 0;
    for (unsigned k = 0; k <= 7; ++k) {
        std::set<DyckPath> seen;
        for (const auto& t : enumerate_plane_trees(k + 1)) {
            const auto c = plane_tree_to_dyck(t);
            const auto sigma = dyck_to_involution(c);
            o.pass = o.pass && dyck_to_plane_tree(c) == t && sigma == tree_involution(t) && sigma.openers() == c.ascents();
            seen.insert(c);
            ++instances;
        }
        const auto paths = enumerate_dyck_paths(k);
        o.pass = o.pass && seen.size() == paths.size() && Rational(paths.size()) == catalan(k);
        for (const auto& c : paths) o.pass = o.pass && plane_tree_to_dyck(dyck_to_plane_tree(c)) == c;
    }
    // an edge crossed down at step 2 into a two-node subtree comes back up at step 5
    const auto fig = PlaneTree::from_encoding("(()((())))");
    bool fig_ok = false;
    for (const auto& e : walk_crossings(fig))
        if (e.down_step == 2) fig_ok = e.up_step == 5 && tree_involution(fig)(2) == 5;
    o.pass = o.pass && fig_ok;
    o.detail = std::to_string(instances) + " trees (429 at k = 7), figure instance s_v=2 s_w=5 " +
               (fig_ok ? "reproduced" : "NOT reproduced");
    return o;
}

Outcome criterion_negative_control() {
    Outcome o;
    unsigned runs = 0, localized = 0;
    for (const auto& l : kMasterLs)
        for (const auto& psi : kMasterPsis)
            for (unsigned k = 1; k <= 10; ++k) {
                const auto w = BareWeights::master(l, 10).perturbed(k, 1);
                const auto r = verify_master_ode(l, psi, 10, w, 10);
                ++runs;
                if (!r.exact() && r.first_mismatch->n == k) ++localized;
            }
    o.pass = runs == localized;
    o.detail = std::to_string(localized) + "/" + std::to_string(runs) + " perturbations B_k += 1 fail with first mismatch at n = k";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"tree statistic identities", criterion_identities},
        {"Catalan generating coefficients", criterion_catalan},
        {"sum of alpha/t! over shapes", criterion_m2},
        {"master differential system", criterion_master_ode},
        {"inverse tree factorial ODEs", criterion_inversion},
        {"special bare weights via involutions", criterion_special_bare},
        {"fundamental lemma and exact limits", criterion_fond_lemma},
        {"Wigner process simulation band", criterion_wigner},
        {"triangular operator moments", criterion_dk8_moments},
        {"triangular operator inversion", criterion_dk8_inversion},
        {"tree / Dyck / involution bijections", criterion_bijections},
        {"negative control", criterion_negative_control},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    return all ? 0 : 1;
}
