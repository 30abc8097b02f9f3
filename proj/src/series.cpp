#include "bsf/series.hpp"

#include "bsf/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bsf {

namespace {

void require_unit_constant(const std::vector<Rational>& coeffs) {
    if (coeffs.empty() || coeffs.front() != 1)
        throw ValidationError("degree function must satisfy psi_0 = 1");
}

std::string join(const std::vector<Rational>& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ",";
        out += to_string(coeffs[i]);
    }
    return out;
}

std::vector<Rational> parse_list(std::string_view text) {
    return parse_polynomial(std::string(text)).coefficients();
}

}  // namespace

SeriesSpec SeriesSpec::geometric() { return SeriesSpec(Kind::geometric, {}); }
SeriesSpec SeriesSpec::exponential() { return SeriesSpec(Kind::exponential, {}); }

SeriesSpec SeriesSpec::polynomial(std::vector<Rational> coefficients) {
    require_unit_constant(coefficients);
    while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
    return SeriesSpec(Kind::polynomial, std::move(coefficients));
}

SeriesSpec SeriesSpec::explicit_coefficients(std::vector<Rational> coefficients) {
    require_unit_constant(coefficients);
    return SeriesSpec(Kind::explicit_coefficients, std::move(coefficients));
}

SeriesSpec SeriesSpec::parse(std::string_view text) {
    if (text == "geometric") return geometric();
    if (text == "exponential") return exponential();
    if (text.starts_with("poly:")) return polynomial(parse_list(text.substr(5)));
    if (text.starts_with("explicit:")) {
        // Keep trailing zeros: they are part of the known prefix.
        std::vector<Rational> coeffs;
        std::stringstream in{std::string(text.substr(9))};
        std::string item;
        while (std::getline(in, item, ',')) coeffs.push_back(parse_rational(item));
        return explicit_coefficients(std::move(coeffs));
    }
    throw ValidationError("unknown degree function '" + std::string(text) +
                          "' (expected geometric, exponential, poly:..., explicit:...)");
}

Rational SeriesSpec::coefficient(unsigned k) const {
    switch (kind_) {
        case Kind::geometric:
            return 1;
        case Kind::exponential:
            return Rational(Integer(1), factorial(k));
        case Kind::polynomial:
            return k < coeffs_.size() ? coeffs_[k] : Rational(0);
        case Kind::explicit_coefficients:
            if (k >= coeffs_.size())
                throw RangeError("degree function coefficient psi_" + std::to_string(k) + " is not specified");
            return coeffs_[k];
    }
    return 0;
}

std::string SeriesSpec::describe() const {
    switch (kind_) {
        case Kind::geometric: return "geometric";
        case Kind::exponential: return "exponential";
        case Kind::polynomial: return "poly:" + join(coeffs_);
        case Kind::explicit_coefficients: return "explicit:" + join(coeffs_);
    }
    return {};
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw ValidationError("a truncated series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::zero(unsigned order) { return TruncatedSeries(std::vector<Rational>(order + 1)); }

TruncatedSeries TruncatedSeries::constant(const Rational& c, unsigned order) {
    auto s = zero(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::variable(unsigned order) {
    auto s = zero(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

const Rational& TruncatedSeries::at(std::size_t n) const {
    if (n >= coeffs_.size())
        throw RangeError("coefficient " + std::to_string(n) + " beyond series order " + std::to_string(order()));
    return coeffs_[n];
}

std::optional<unsigned> TruncatedSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<unsigned>(i);
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(unsigned new_order) const {
    if (new_order > order())
        throw RangeError("cannot extend a series of order " + std::to_string(order()) + " to order " +
                         std::to_string(new_order));
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) throw RangeError("derivative of an order-0 series has no coefficients");
    std::vector<Rational> d(order());
    for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = coeffs_[n] * static_cast<long>(n);
    return TruncatedSeries(std::move(d));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const unsigned m = std::min(a.order(), b.order());
    std::vector<Rational> c(m + 1);
    for (unsigned i = 0; i <= m; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (unsigned j = 0; i + j <= m; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(c));
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (n) out << " + ";
        out << bsf::to_string(coeffs_[n]);
        if (n == 1) out << " z";
        if (n > 1) out << " z^" << n;
    }
    out << " (order " << order() << ")";
    return out.str();
}

TruncatedSeries compose_degree_function(const SeriesSpec& psi, const TruncatedSeries& y) {
    const unsigned m = y.order();
    const bool constant_free = y.at(0) == 0;
    std::vector<Rational> r(m + 1);

    switch (psi.kind()) {
        case SeriesSpec::Kind::geometric:
            if (!constant_free)
                throw CompositionDomainError("geometric degree function needs a series with zero constant term");
            // (1 - Y) R = 1, lower triangular with unit diagonal.
            r[0] = 1;
            for (unsigned n = 1; n <= m; ++n)
                for (unsigned k = 1; k <= n; ++k) r[n] += y.at(k) * r[n - k];
            return TruncatedSeries(std::move(r));

        case SeriesSpec::Kind::exponential:
            if (!constant_free)
                throw CompositionDomainError("exponential degree function needs a series with zero constant term");
            // n r_n = sum_k k y_k r_{n-k}
            r[0] = 1;
            for (unsigned n = 1; n <= m; ++n) {
                Rational acc = 0;
                for (unsigned k = 1; k <= n; ++k) acc += y.at(k) * static_cast<long>(k) * r[n - k];
                r[n] = acc / static_cast<long>(n);
            }
            return TruncatedSeries(std::move(r));

        case SeriesSpec::Kind::polynomial:
        case SeriesSpec::Kind::explicit_coefficients: {
            unsigned top;
            if (psi.kind() == SeriesSpec::Kind::polynomial) {
                top = static_cast<unsigned>(psi.listed_coefficients().size() - 1);
            } else {
                if (!constant_free)
                    throw CompositionDomainError(
                        "a degree function known only by a coefficient prefix needs zero constant term");
                // Y^k vanishes to order M once k * valuation > M.
                auto v = y.valuation();
                top = v ? m / *v : 0;
            }
            auto acc = TruncatedSeries::constant(psi.coefficient(top), m);
            for (unsigned k = top; k-- > 0;) {
                acc = acc * y;
                acc = acc + TruncatedSeries::constant(psi.coefficient(k), m);
            }
            return acc;
        }
    }
    throw CompositionDomainError("unsupported degree function");
}

TruncatedSeries apply_euler_polynomial(const Polynomial& p, const TruncatedSeries& s) {
    std::vector<Rational> out(s.order() + 1);
    for (unsigned n = 0; n <= s.order(); ++n) out[n] = p(Rational(static_cast<long>(n) + 1)) * s.at(n);
    return TruncatedSeries(std::move(out));
}

SeriesComparison series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
    SeriesComparison result;
    result.compared_order = std::min(a.order(), b.order());
    for (unsigned n = 0; n <= result.compared_order; ++n) {
        if (a.at(n) != b.at(n)) {
            result.equal = false;
            result.mismatch_index = n;
            result.lhs = a.at(n);
            result.rhs = b.at(n);
            break;
        }
    }
    return result;
}

}  // namespace bsf
