#pragma once

#include "bsf/bare.hpp"
#include "bsf/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bsf {

/// Stationary covariance beta^2 r(|k - m|) of the entry processes of a Wigner process.
/// r(0) = 1 and |r(m)| <= 1 are enforced at construction.
class CovarianceSpec {
public:
    enum class Family { constant_one, inverse_linear, geometric, table };

    /// r(m) = 1: every matrix of the process is the same.
    static CovarianceSpec constant_one(Rational beta2);
    /// r(m) = 1/(m+1). With beta^2 = 2 this gives B^r_k = 1/k, i.e. B^r(t) = 1/t!.
    static CovarianceSpec inverse_linear(Rational beta2);
    /// r(m) = rho^m, |rho| <= 1.
    static CovarianceSpec geometric(Rational rho, Rational beta2);
    /// r(0..M) given explicitly; lags beyond M are a RangeError.
    static CovarianceSpec table(std::vector<Rational> r, Rational beta2);

    /// "constant", "inverse-linear", "geometric:rho" or "table:r0,r1,...".
    static CovarianceSpec parse(std::string_view family, Rational beta2);

    Family family() const { return family_; }
    const Rational& beta2() const { return beta2_; }
    Rational correlation(unsigned lag) const;
    /// beta^2 r(lag).
    Rational scaled(unsigned lag) const { return beta2_ * correlation(lag); }
    /// Largest supported lag for tables, nullopt for the named families.
    std::optional<unsigned> max_lag() const;

    /// B^r_k = beta^2 r(2k - 1) for k = 1..K.
    BareWeights bare_weights(unsigned max_index) const;

    std::string describe() const;

private:
    CovarianceSpec(Family family, Rational beta2) : family_(family), beta2_(std::move(beta2)) {}
    Family family_;
    Rational beta2_;
    Rational rho_;
    std::vector<Rational> table_;
};

}  // namespace bsf
