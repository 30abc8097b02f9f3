#include "bsf/triangular.hpp"

#include "bsf/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace bsf {

namespace {

class PhiCache {
public:
    const Polynomial& get(std::string_view encoding, Parity parity) {
        auto key = std::make_pair(std::string(encoding), parity);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        Polynomial value = compute(encoding, parity);
        if (value.degree() > static_cast<int>(encoding.size() / 2) - 1)
            throw std::logic_error("iterated integral exceeds degree |t| - 1 for " + std::string(encoding));
        return cache_.emplace(std::move(key), std::move(value)).first->second;
    }

private:
    Polynomial compute(std::string_view encoding, Parity parity) {
        Polynomial result = Polynomial::constant(1);
        const Parity other = parity == Parity::x ? Parity::y : Parity::x;
        for (auto child : child_encodings(encoding)) {
            Polynomial f = get(child, other).antiderivative();
            if (parity == Parity::x) {
                result *= f;  // int_0^u
            } else {
                result *= Polynomial::constant(f(Rational(1))) - f;  // int_u^1
            }
        }
        return result;
    }

    std::map<std::pair<std::string, Parity>, Polynomial> cache_;
};

}  // namespace

Polynomial phi_iterated(const PlaneTree& t, Parity parity) {
    PhiCache cache;
    return cache.get(t.encoding(), parity);
}

MomentPair dh_moment_both(unsigned n, unsigned max_n) {
    PhiCache cache;
    MomentPair m{0, 0};
    for_each_plane_tree(
        n + 1,
        [&](const PlaneTree& t) {
            m.x_start += cache.get(t.encoding(), Parity::x).integral_unit();
            m.y_start += cache.get(t.encoding(), Parity::y).integral_unit();
        },
        max_n);
    return m;
}

Rational dh_moment(unsigned n, unsigned max_n) {
    if (n == 0) throw RangeError("dh_moment needs n >= 1");
    auto m = dh_moment_both(n, max_n);
    if (m.x_start != m.y_start)
        throw std::logic_error("x-start and y-start moment sums disagree at n = " + std::to_string(n));
    return m.x_start;
}

Rational dh_closed_form(unsigned n) {
    return Rational(Integer(boost::multiprecision::pow(Integer(n), n)), factorial(n + 1));
}

VerificationReport verify_dk8_closed_form(unsigned n_max, unsigned max_n) {
    VerificationReport report;
    report.statement = "tau((T T*)^n) = n^n / (n+1)!";
    report.parameters = {{"n_max", n_max}};
    report.order = n_max;
    nlohmann::json table = nlohmann::json::array();
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto m = dh_moment_both(n, max_n);
        const Rational closed = dh_closed_form(n);
        if (m.x_start != m.y_start) report.record_mismatch(n, m.x_start, m.y_start);
        if (m.x_start != closed) report.record_mismatch(n, m.x_start, closed);
        table.push_back({{"n", n}, {"moment", to_string(m.x_start)}, {"y_start", to_string(m.y_start)}});
    }
    report.details["moments"] = table;
    return report;
}

TruncatedSeries dh_generating_series(unsigned order, unsigned max_n) {
    std::vector<Rational> y(order + 1);
    for (unsigned n = 1; n <= order; ++n) y[n] = n == 1 ? Rational(1) : dh_moment(n - 1, max_n);
    return TruncatedSeries(std::move(y));
}

VerificationReport verify_dk8_inversion(unsigned order, unsigned max_n) {
    if (order < 2) throw RangeError("inversion check needs order >= 2");
    VerificationReport report;
    report.statement = "G(s / (1 - Y_0(s))) = s, G(z) = z exp(-z)";
    report.parameters = {{"G", "z exp(-z)"}};
    report.order = order;

    const TruncatedSeries y0 = dh_generating_series(order, max_n);
    // s/(1 - Y_0) = s * geometric(Y_0).
    const TruncatedSeries l =
        TruncatedSeries::variable(order) * compose_degree_function(SeriesSpec::geometric(), y0);
    // exp(-L) through the exponential degree function of -L; coefficients (-1)^k/k! of e^(-z).
    const TruncatedSeries g_of_l = l * compose_degree_function(SeriesSpec::exponential(), l * Rational(-1));
    report.absorb(series_equal(g_of_l, TruncatedSeries::variable(order)));

    const TruncatedSeries tree_function = TruncatedSeries::from_coefficients(order, [](unsigned n) {
        if (n == 0) return Rational(0);
        return Rational(Integer(boost::multiprecision::pow(Integer(n), n - 1)), factorial(n));
    });
    const auto cmp = series_equal(l, tree_function);
    report.details["tree_function_match"] = cmp.equal;
    report.absorb(cmp);
    report.details["L"] = to_json(l);
    return report;
}

ClosedFormResidual closed_form_solution_residual(const std::vector<double>& s_grid, const std::vector<double>& u_grid) {
    using boost::math::quadrature::gauss_kronrod;
    ClosedFormResidual out;
    for (double s : s_grid) {
        // w = s e^w (the tree function), lambda = -w.
        double w = s;
        for (int i = 0; i < 200; ++i) w = s * std::exp(w);
        const double lambda = -w;
        auto x = [&](double u) { return 1.0 - std::exp(lambda * u); };
        auto y = [&](double u) { return 1.0 - std::exp(-lambda * (u - 1.0)); };
        for (double u : u_grid) {
            const double ix = u > 0 ? gauss_kronrod<double, 21>::integrate([&](double v) { return 1.0 / (1.0 - y(v)); }, 0.0, u) : 0.0;
            const double iy = u < 1 ? gauss_kronrod<double, 21>::integrate([&](double v) { return 1.0 / (1.0 - x(v)); }, u, 1.0) : 0.0;
            out.integral_system = std::max(out.integral_system, std::abs(x(u) - s * ix));
            out.integral_system = std::max(out.integral_system, std::abs(y(u) - s * iy));
        }
        // Y_0(s) = sum_n s^n (n-1)^(n-1)/n!, using the closed-form moments.
        double series = 0;
        for (unsigned n = 1; n <= 400; ++n) {
            const double m = n == 1 ? 1.0 : std::exp((n - 1) * std::log(double(n - 1)) - std::lgamma(double(n) + 1.0));
            series += std::pow(s, n) * m;
        }
        out.moment_series = std::max(out.moment_series, std::abs(series - y(0.0)));
    }
    return out;
}

}  // namespace bsf
