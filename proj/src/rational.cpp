#include "bsf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bsf {

Integer factorial(unsigned n) {
    Integer result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Rational power(const Rational& base, unsigned exponent) {
    Rational result = 1;
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1u) result *= b;
        b *= b;
        exponent >>= 1u;
    }
    return result;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
    const Integer den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("not a rational: '" + original + "'");
        Integer d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator: '" + original + "'");
        value = Rational(Integer{std::string(num)}, d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw std::invalid_argument("not a rational: '" + original + "'");
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer w = whole.empty() ? Integer(0) : Integer{std::string(whole)};
        value = Rational(w * scale + Integer{std::string(frac)}, scale);
    } else {
        if (!all_digits(text)) throw std::invalid_argument("not a rational: '" + original + "'");
        value = Rational(Integer{std::string(text)});
    }
    return negative ? Rational(-value) : value;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace bsf
