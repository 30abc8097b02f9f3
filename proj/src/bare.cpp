#include "bsf/bare.hpp"

#include "bsf/errors.hpp"

#include <sstream>

namespace bsf {

BareWeights BareWeights::explicit_list(std::vector<Rational> weights) {
    BareWeights b(Rule::explicit_list, static_cast<unsigned>(weights.size()));
    b.list_ = std::move(weights);
    return b;
}

BareWeights BareWeights::master(Polynomial l, unsigned max_index) {
    BareWeights b(Rule::master, max_index);
    b.master_ = std::move(l);
    return b;
}

BareWeights BareWeights::inverse_factorial_power(unsigned l, unsigned max_index) {
    BareWeights b(Rule::inverse_factorial_power, max_index);
    b.power_ = l;
    return b;
}

BareWeights BareWeights::geometric(Rational rho, unsigned max_index) {
    BareWeights b(Rule::geometric, max_index);
    b.rho_ = std::move(rho);
    return b;
}

BareWeights BareWeights::parse(std::string_view text, unsigned max_index) {
    auto after = [&](std::string_view prefix) { return std::string(text.substr(prefix.size())); };
    if (text == "one") return master(Polynomial{0, 1}, max_index);
    if (text == "factorial") return master(Polynomial{0, 0, 1}, max_index);
    if (text.starts_with("master:")) return master(parse_polynomial(after("master:")), max_index);
    if (text.starts_with("inverse-factorial:")) {
        const std::string l = after("inverse-factorial:");
        unsigned value = 0;
        try {
            std::size_t used = 0;
            value = static_cast<unsigned>(std::stoul(l, &used));
            if (used != l.size()) throw std::invalid_argument(l);
        } catch (const std::exception&) {
            throw ValidationError("inverse-factorial power must be a non-negative integer: '" + l + "'");
        }
        return inverse_factorial_power(value, max_index);
    }
    if (text.starts_with("geometric:")) return geometric(parse_rational(after("geometric:")), max_index);
    if (text.starts_with("explicit:")) {
        std::vector<Rational> list;
        std::stringstream in(after("explicit:"));
        std::string item;
        while (std::getline(in, item, ',')) list.push_back(parse_rational(item));
        return explicit_list(std::move(list));
    }
    throw ValidationError("unknown weight rule '" + std::string(text) +
                          "' (expected one, factorial, master:..., inverse-factorial:l, geometric:rho, explicit:...)");
}

Rational BareWeights::weight(unsigned k) const {
    if (k == 0 || k > max_index_)
        throw RangeError("bare weight B_" + std::to_string(k) + " outside 1.." + std::to_string(max_index_));
    switch (rule_) {
        case Rule::explicit_list: return list_[k - 1];
        case Rule::master: return master_(Rational(k)) / Rational(k);
        case Rule::inverse_factorial_power: return Rational(Integer(1), Integer(boost::multiprecision::pow(Integer(k), power_ + 1)));
        case Rule::geometric: return power(rho_, k);
    }
    return 0;
}

BareWeights BareWeights::perturbed(unsigned k, const Rational& delta) const {
    std::vector<Rational> list;
    for (unsigned i = 1; i <= max_index_; ++i) list.push_back(weight(i));
    if (k == 0 || k > max_index_) throw RangeError("cannot perturb B_" + std::to_string(k));
    list[k - 1] += delta;
    return explicit_list(std::move(list));
}

std::string BareWeights::describe() const {
    switch (rule_) {
        case Rule::master: return "master:L(z)=" + master_.to_string("z");
        case Rule::inverse_factorial_power: return "inverse-factorial:" + std::to_string(power_);
        case Rule::geometric: return "geometric:" + to_string(rho_);
        case Rule::explicit_list: {
            std::string out = "explicit:";
            for (std::size_t i = 0; i < list_.size(); ++i) out += (i ? "," : "") + to_string(list_[i]);
            return out;
        }
    }
    return {};
}

namespace {

Rational bare_of(std::string_view encoding, const BareWeights& b) {
    Rational v = b.weight(static_cast<unsigned>(encoding.size() / 2));
    for (auto c : child_encodings(encoding)) {
        if (v == 0) break;
        v *= bare_of(c, b);
    }
    return v;
}

nlohmann::json weights_json(const BareWeights& b) { return b.describe(); }

}  // namespace

Rational bare_value(const PlaneTree& t, const BareWeights& b) {
    if (t.size() > b.max_index())
        throw RangeError("tree of size " + std::to_string(t.size()) + " needs B_k beyond K = " +
                         std::to_string(b.max_index()));
    return bare_of(t.encoding(), b);
}

TruncatedSeries generating_coefficients(const BareWeights& b, const SeriesSpec& psi, unsigned order) {
    if (order > b.max_index())
        throw RangeError("series order " + std::to_string(order) + " exceeds weight range K = " +
                         std::to_string(b.max_index()));
    std::vector<Rational> a(order + 1);
    // [z^(n-1)] psi(A) only depends on a_1..a_(n-1), so each step composes the partial series.
    for (unsigned n = 1; n <= order; ++n) {
        TruncatedSeries partial(std::vector<Rational>(a.begin(), a.begin() + n));
        a[n] = b.weight(n) * compose_degree_function(psi, partial).at(n - 1);
    }
    return TruncatedSeries(std::move(a));
}

Rational generating_coefficients_bruteforce(const BareWeights& b, const SeriesSpec& psi, unsigned n, unsigned max_n) {
    Rational sum = 0;
    for_each_plane_tree(
        n,
        [&](const PlaneTree& t) {
            Rational w = omega_weight(t, psi);
            if (w != 0) sum += bare_value(t, b) * w;
        },
        max_n);
    return sum;
}

TruncatedSeries generating_series_bruteforce(const BareWeights& b, const SeriesSpec& psi, unsigned order,
                                             unsigned max_n) {
    std::vector<Rational> a(order + 1);
    for (unsigned n = 1; n <= order; ++n) a[n] = generating_coefficients_bruteforce(b, psi, n, max_n);
    return TruncatedSeries(std::move(a));
}

Rational bseries_coefficient_rooted(const BareWeights& b, const SeriesSpec& psi, unsigned n, unsigned max_n) {
    Rational sum = 0;
    for (auto& t : enumerate_rooted_shapes(n, max_n)) {
        Rational delta = elementary_differential(t, psi);
        if (delta == 0) continue;
        sum += Rational(alpha_count(t) * tree_factorial(t)) * bare_value(t, b) * delta;
    }
    return sum / Rational(factorial(n));
}

VerificationReport verify_master_ode(const Polynomial& l, const SeriesSpec& psi, unsigned order,
                                     const std::optional<BareWeights>& weights, unsigned max_n) {
    if (order < 2) throw RangeError("master ODE check needs order >= 2");
    const BareWeights b = weights ? *weights : BareWeights::master(l, order);

    VerificationReport report;
    report.statement = "Y' = L(1 + theta) psi(Y)";
    report.parameters = {{"L", l.to_string("z")}, {"psi", psi.describe()}, {"weights", weights_json(b)}};
    report.order = order;

    const TruncatedSeries y = generating_series_bruteforce(b, psi, order, max_n);
    const TruncatedSeries lhs = y.derivative();
    const TruncatedSeries rhs = apply_euler_polynomial(l, compose_degree_function(psi, y));
    report.absorb(series_equal(lhs, rhs), 1);
    return report;
}

VerificationReport verify_inverse_factorial_ode(unsigned l, const SeriesSpec& psi, unsigned order, unsigned max_n) {
    if (order < 2) throw RangeError("inverse-factorial ODE check needs order >= 2");
    const BareWeights b = BareWeights::inverse_factorial_power(l, order);

    VerificationReport report;
    report.statement = "(theta + 1)^l Y' = psi(Y)";
    report.parameters = {{"l", l}, {"psi", psi.describe()}, {"weights", weights_json(b)}};
    report.order = order;

    const TruncatedSeries y = generating_series_bruteforce(b, psi, order, max_n);
    const TruncatedSeries dy = y.derivative();
    const TruncatedSeries rhs = compose_degree_function(psi, y);
    report.absorb(series_equal(apply_euler_polynomial(Polynomial::monomial(l), dy), rhs), 1);

    if (l == 1) {
        // z Y'' + Y' has order M - 2 after the second derivative.
        const TruncatedSeries d2 = dy.derivative();
        std::vector<Rational> shifted(d2.order() + 1);
        for (unsigned n = 1; n <= d2.order(); ++n) shifted[n] = d2.at(n - 1);
        const TruncatedSeries second_order = TruncatedSeries(std::move(shifted)) + dy;
        const auto cmp = series_equal(second_order, rhs);
        report.details["second_order_form"] = cmp.equal ? "exact" : "fail";
        report.absorb(cmp, 1);
    }
    return report;
}

}  // namespace bsf

namespace bsf {

VerificationReport verify_identities(unsigned max_size, unsigned max_n) {
    VerificationReport report;
    report.statement = "alpha(t) sigma(t) = |t|!/t!  and  alpha(t) t! = |t|! omega_L(t) kappa(t)";
    report.parameters = {{"max_size", max_size}};
    report.order = max_size;
    nlohmann::json counts = nlohmann::json::array();
    unsigned long checks = 0;
    for (unsigned n = 1; n <= max_size; ++n) {
        const Integer nfact = factorial(n);
        const auto shapes = enumerate_rooted_shapes(n, max_n);
        Integer kappa_total = 0;
        for (const auto& t : shapes) {
            const Integer alpha = alpha_count(t);
            const Integer sigma = symmetry_factor(t);
            const Integer tf = tree_factorial(t);
            const Integer kappa = kappa_count(t);
            if (alpha * sigma * tf != nfact) report.record_mismatch(n, Rational(alpha * sigma * tf), Rational(nfact));
            const Rational lhs(alpha * tf);
            const Rational rhs = Rational(nfact) * labelled_weight(t) * Rational(kappa);
            if (lhs != rhs) report.record_mismatch(n, lhs, rhs);
            kappa_total += kappa;
            checks += 2;
        }
        unsigned long plane = 0;
        for_each_plane_tree(n, [&](const PlaneTree&) { ++plane; }, max_n);
        if (kappa_total != plane) report.record_mismatch(n, Rational(kappa_total), Rational(plane));
        counts.push_back({{"n", n}, {"shapes", shapes.size()}, {"plane_trees", plane}});
    }
    report.details["counts"] = counts;
    report.details["identity_checks"] = checks;
    return report;
}

}  // namespace bsf
