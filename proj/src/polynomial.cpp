#include "bsf/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace bsf {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(unsigned degree, const Rational& c) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> product(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(product);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

Polynomial Polynomial::antiderivative() const {
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::reflect() const {
    // (1 - x)^i expanded with alternating binomials.
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j <= i; ++j) {
            Rational term = coeffs_[i] * Rational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)));
            out[j] += (j % 2 == 0) ? term : Rational(-term);
        }
    }
    return Polynomial(std::move(out));
}

Rational Polynomial::integral_unit() const {
    Rational sum = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += coeffs_[i] / Rational(static_cast<long>(i + 1));
    return sum;
}

std::string Polynomial::to_string(const std::string& variable) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        Rational c = coeffs_[idx];
        if (c == 0) continue;
        if (!first) {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            out << "-";
            c = -c;
        }
        first = false;
        if (idx == 0) {
            out << bsf::to_string(c);
            continue;
        }
        if (c != 1) out << bsf::to_string(c) << " ";
        out << variable;
        if (idx > 1) out << "^" << idx;
    }
    return out.str();
}

Polynomial parse_polynomial(const std::string& text) {
    std::vector<Rational> coeffs;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) coeffs.push_back(parse_rational(item));
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    return Polynomial(std::move(coeffs));
}

}  // namespace bsf
