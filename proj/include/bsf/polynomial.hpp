#pragma once

#include "bsf/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace bsf {

/// Dense univariate polynomial with exact rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(unsigned degree, const Rational& c = 1);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const;
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Antiderivative vanishing at zero.
    Polynomial antiderivative() const;
    /// x -> 1 - x.
    Polynomial reflect() const;
    /// Exact integral over [0, 1].
    Rational integral_unit() const;

    /// "1/2 x^2 - x + 3" style, highest degree first.
    std::string to_string(const std::string& variable = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Parses a comma separated coefficient list "c0,c1,...,cd".
Polynomial parse_polynomial(const std::string& text);

}  // namespace bsf
