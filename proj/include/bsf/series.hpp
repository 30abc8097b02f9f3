#pragma once

#include "bsf/polynomial.hpp"
#include "bsf/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsf {

/// Degree function psi(z) = 1 + sum_k psi_k z^k of a simply generated family.
class SeriesSpec {
public:
    enum class Kind { geometric, exponential, polynomial, explicit_coefficients };

    /// 1/(1-z): every psi_k = 1.
    static SeriesSpec geometric();
    /// exp(z): psi_k = 1/k!.
    static SeriesSpec exponential();
    /// Finite support; coefficients listed from psi_0, which must be 1.
    static SeriesSpec polynomial(std::vector<Rational> coefficients);
    /// A known prefix psi_0..psi_K of an otherwise unspecified sequence. Asking for
    /// psi_k beyond the prefix is a RangeError rather than an implicit zero.
    static SeriesSpec explicit_coefficients(std::vector<Rational> coefficients);

    /// "geometric", "exponential", "poly:c0,c1,..." or "explicit:c0,c1,...".
    static SeriesSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    const std::vector<Rational>& listed_coefficients() const { return coeffs_; }
    Rational coefficient(unsigned k) const;
    std::string describe() const;

private:
    SeriesSpec(Kind kind, std::vector<Rational> coeffs) : kind_(kind), coeffs_(std::move(coeffs)) {}
    Kind kind_;
    std::vector<Rational> coeffs_;
};

/// a_0 + a_1 z + ... + a_M z^M, exact, with the order M carried as state.
class TruncatedSeries {
public:
    /// Order is coefficients.size() - 1; an empty vector is rejected.
    explicit TruncatedSeries(std::vector<Rational> coefficients);

    static TruncatedSeries zero(unsigned order);
    static TruncatedSeries constant(const Rational& c, unsigned order);
    /// The series z.
    static TruncatedSeries variable(unsigned order);
    /// Truncation of a power series given by its coefficient function.
    template <class F>
    static TruncatedSeries from_coefficients(unsigned order, F&& coefficient) {
        std::vector<Rational> c;
        c.reserve(order + 1);
        for (unsigned n = 0; n <= order; ++n) c.push_back(coefficient(n));
        return TruncatedSeries(std::move(c));
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    /// Throws RangeError for n > order().
    const Rational& at(std::size_t n) const;
    const Rational& operator[](std::size_t n) const { return at(n); }
    std::span<const Rational> coefficients() const { return coeffs_; }
    /// Index of the first nonzero coefficient, or nullopt when all vanish.
    std::optional<unsigned> valuation() const;

    /// Throws RangeError when new_order exceeds the current order.
    TruncatedSeries truncated(unsigned new_order) const;
    /// Order M series maps to order M-1; order 0 is a RangeError.
    TruncatedSeries derivative() const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const Rational& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// "a0 + a1 z + ... + aM z^M (order M)".
    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

/// psi(Y) to the order of Y. Geometric psi is obtained by solving (1 - Y) R = 1,
/// exponential psi by the recursion R' = Y' R. Non-polynomial psi requires Y(0) = 0.
TruncatedSeries compose_degree_function(const SeriesSpec& psi, const TruncatedSeries& y);

/// P(theta + 1) with theta = z d/dz: a_n -> P(n + 1) a_n.
TruncatedSeries apply_euler_polynomial(const Polynomial& p, const TruncatedSeries& s);

struct SeriesComparison {
    bool equal = true;
    unsigned compared_order = 0;
    /// First differing index, with both values, when !equal.
    std::optional<unsigned> mismatch_index;
    Rational lhs;
    Rational rhs;
};

/// Exact comparison up to min(a.order(), b.order()).
SeriesComparison series_equal(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace bsf
