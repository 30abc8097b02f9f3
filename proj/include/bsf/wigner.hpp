#pragma once

#include "bsf/covariance.hpp"
#include "bsf/rational.hpp"
#include "bsf/report.hpp"
#include "bsf/series.hpp"
#include "bsf/trees.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bsf {

/// Finite discrete law of the diagonal entries, normalized so that mu_1 = 1.
class DiagonalLaw {
public:
    using Atom = std::pair<Rational, Rational>;  // (value, probability)

    /// delta_1: D_N is the identity.
    static DiagonalLaw point_mass_one();
    /// Throws ValidationError unless probabilities are non-negative, sum to 1 and mu_1 = 1.
    static DiagonalLaw discrete(std::vector<Atom> atoms);
    /// "delta1" or "v:p,v:p,...".
    static DiagonalLaw parse(std::string_view text);

    const std::vector<Atom>& atoms() const { return atoms_; }
    Rational moment(unsigned k) const;
    /// psi_mu with psi_k = mu_{k+1}, known for k = 0..order.
    SeriesSpec degree_function(unsigned order) const;
    std::string describe() const;

private:
    explicit DiagonalLaw(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
    std::vector<Atom> atoms_;
};

inline constexpr const char* kGeneratorName = "mt19937_64";

struct TraceEstimate {
    unsigned k = 0;  // word length
    unsigned dimension = 0;
    unsigned trials = 0;
    double mean = 0;
    /// Sample standard deviation / sqrt(trials).
    double standard_error = 0;
    std::uint64_t seed = 0;
    std::string generator = kGeneratorName;
};

/// Lower-triangular F with F F^T = [beta^2 r(|k - m|)]_{k,m < K}. Semi-definite inputs
/// (e.g. constant r) get zero columns. Throws NotPositiveDefiniteError naming the first
/// failing leading minor.
Eigen::MatrixXd process_factor(const CovarianceSpec& cov, unsigned word_length);

/// K symmetric N x N matrices whose entry processes are independent centered Gaussian
/// vectors with covariance beta^2 r(|k - m|); diagonal entries are drawn the same way.
std::vector<Eigen::MatrixXd> sample_process(unsigned dimension, unsigned word_length, const CovarianceSpec& cov,
                                            std::mt19937_64& rng);

/// Monte Carlo estimate of N^(-1-k/2) E tr(D G(1) D G(2) ... G(k) D). Trial i draws from
/// its own stream seeded by (seed, i), so results do not depend on `workers`.
TraceEstimate empirical_trace(unsigned dimension, unsigned k, const CovarianceSpec& cov, const DiagonalLaw& law,
                              unsigned trials, std::uint64_t seed, unsigned workers = 0);

/// Limit B_{2k}(r) = (1/B^r_{k+1}) sum_{t in F_{k+1}} B^r(t) omega_mu(t), evaluated as
/// sum_t prod_i B^r(t_i) omega_mu(t) over the root subtrees t_i.
Rational limit_trace_combinatorial(unsigned k, const CovarianceSpec& cov, const DiagonalLaw& law,
                                   unsigned max_n = default_max_tree_size());

/// Limit of the normalized trace for a word of the given length: 0 for odd lengths.
Rational limit_trace(unsigned word_length, const CovarianceSpec& cov, const DiagonalLaw& law,
                     unsigned max_n = default_max_tree_size());

/// sum_k z^k B_{2(k-1)}(r) = z psi_mu(Y), Y(z) = sum_k z^k B^r_k B_{2(k-1)}(r), to order M.
VerificationReport verify_fond_lemma(const CovarianceSpec& cov, const DiagonalLaw& law, unsigned order,
                                     unsigned max_n = default_max_tree_size());

inline constexpr double kDefaultSlack = 8.0;

struct SimComparison {
    TraceEstimate estimate;
    Rational exact;
    double exact_value = 0;
    double z = 0;
    double tolerance = 0;
    bool pass = false;
};

/// Passes when |mean - limit| <= 3 stderr + slack / N.
SimComparison compare_sim_limit(unsigned k, const CovarianceSpec& cov, const DiagonalLaw& law, unsigned dimension,
                                unsigned trials, std::uint64_t seed, double slack = kDefaultSlack,
                                unsigned workers = 0);

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

}  // namespace bsf
