#pragma once

#include "bsf/polynomial.hpp"
#include "bsf/rational.hpp"
#include "bsf/report.hpp"
#include "bsf/series.hpp"
#include "bsf/trees.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bsf {

/// The weight sequence B_1..B_K of a bare Green function.
class BareWeights {
public:
    enum class Rule { explicit_list, master, inverse_factorial_power, geometric };

    /// B_k = weights[k-1]; K = weights.size().
    static BareWeights explicit_list(std::vector<Rational> weights);
    /// B_k = L(k)/k.
    static BareWeights master(Polynomial l, unsigned max_index);
    /// B_k = 1/k^(l+1), the weights of B(t) = 1/t!^(l+1).
    static BareWeights inverse_factorial_power(unsigned l, unsigned max_index);
    /// B_k = rho^k.
    static BareWeights geometric(Rational rho, unsigned max_index);

    /// "one", "factorial", "master:L0,L1,...", "inverse-factorial:l", "geometric:rho",
    /// "explicit:B1,B2,...". K is ignored for explicit lists.
    static BareWeights parse(std::string_view text, unsigned max_index);

    Rule rule() const { return rule_; }
    unsigned max_index() const { return max_index_; }
    /// Throws RangeError outside 1..K.
    Rational weight(unsigned k) const;
    /// Explicit copy with B_k shifted by delta.
    BareWeights perturbed(unsigned k, const Rational& delta) const;
    std::string describe() const;

private:
    BareWeights(Rule rule, unsigned max_index) : rule_(rule), max_index_(max_index) {}
    Rule rule_;
    unsigned max_index_;
    std::vector<Rational> list_;
    Polynomial master_;
    unsigned power_ = 0;
    Rational rho_;
};

/// B(t) = B_|t| prod B(t_i). Throws RangeError if |t| > K.
Rational bare_value(const PlaneTree& t, const BareWeights& b);
inline Rational bare_value(const RootedTreeShape& t, const BareWeights& b) { return bare_value(t.canonical(), b); }

/// a_n = sum over plane trees of size n of B(t) omega(t), for n = 0..M (a_0 = 0), by the
/// convolution recursion a_n = B_n [z^(n-1)] psi(A).
TruncatedSeries generating_coefficients(const BareWeights& b, const SeriesSpec& psi, unsigned order);

/// Independent oracle: the plane-tree sum for a single n, by enumeration.
Rational generating_coefficients_bruteforce(const BareWeights& b, const SeriesSpec& psi, unsigned n,
                                            unsigned max_n = default_max_tree_size());
/// The oracle for every n = 1..M assembled into a series with a_0 = 0.
TruncatedSeries generating_series_bruteforce(const BareWeights& b, const SeriesSpec& psi, unsigned order,
                                             unsigned max_n = default_max_tree_size());

/// (1/n!) sum over rooted shapes of size n of alpha(t) t! B(t) delta_t.
Rational bseries_coefficient_rooted(const BareWeights& b, const SeriesSpec& psi, unsigned n,
                                    unsigned max_n = default_max_tree_size());

/// Residual Y' - L(1 + theta) psi(Y) with Y rebuilt from plane-tree enumeration up to
/// order M. `weights` replaces the master-rule weights L(k)/k (negative controls).
/// The mismatch index n is the tree size whose coefficient n a_n disagrees.
VerificationReport verify_master_ode(const Polynomial& l, const SeriesSpec& psi, unsigned order,
                                     const std::optional<BareWeights>& weights = std::nullopt,
                                     unsigned max_n = default_max_tree_size());

/// Residual (theta + 1)^l Y' - psi(Y) for B(t) = 1/t!^(l+1), Y from enumeration.
/// For l = 1 the second order form z Y'' + Y' = psi(Y) is checked as well.
VerificationReport verify_inverse_factorial_ode(unsigned l, const SeriesSpec& psi, unsigned order,
                                                unsigned max_n = default_max_tree_size());

}  // namespace bsf

namespace bsf {

/// alpha sigma t! = |t|! and alpha t! = |t|! omega_L kappa on every rooted shape of size
/// 1..max_size, plus sum of kappa over shapes = number of plane trees.
VerificationReport verify_identities(unsigned max_size, unsigned max_n = default_max_tree_size());

}  // namespace bsf
