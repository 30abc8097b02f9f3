#include "bsf/wigner.hpp"

#include "bsf/errors.hpp"

#include <cmath>
#include <sstream>
#include <thread>

namespace bsf {

DiagonalLaw DiagonalLaw::point_mass_one() { return DiagonalLaw({{Rational(1), Rational(1)}}); }

DiagonalLaw DiagonalLaw::discrete(std::vector<Atom> atoms) {
    if (atoms.empty()) throw ValidationError("diagonal law needs at least one atom");
    Rational total = 0, mean = 0;
    for (auto& [value, prob] : atoms) {
        if (prob < 0) throw ValidationError("negative probability " + to_string(prob));
        total += prob;
        mean += prob * value;
    }
    if (total != 1) throw ValidationError("diagonal law probabilities sum to " + to_string(total) + ", not 1");
    if (mean != 1) throw ValidationError("diagonal law must have mu_1 = 1, got " + to_string(mean));
    return DiagonalLaw(std::move(atoms));
}

DiagonalLaw DiagonalLaw::parse(std::string_view text) {
    if (text == "delta1") return point_mass_one();
    std::vector<Atom> atoms;
    std::stringstream in{std::string(text)};
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ValidationError("diagonal atom must be value:probability, got '" + item + "'");
        atoms.emplace_back(parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1)));
    }
    return discrete(std::move(atoms));
}

Rational DiagonalLaw::moment(unsigned k) const {
    Rational m = 0;
    for (auto& [value, prob] : atoms_) m += prob * power(value, k);
    return m;
}

SeriesSpec DiagonalLaw::degree_function(unsigned order) const {
    std::vector<Rational> psi;
    for (unsigned k = 0; k <= order; ++k) psi.push_back(moment(k + 1));
    return SeriesSpec::explicit_coefficients(std::move(psi));
}

std::string DiagonalLaw::describe() const {
    if (atoms_.size() == 1 && atoms_[0].first == 1) return "delta1";
    std::string out;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        out += (i ? "," : "") + to_string(atoms_[i].first) + ":" + to_string(atoms_[i].second);
    return out;
}

Eigen::MatrixXd process_factor(const CovarianceSpec& cov, unsigned word_length) {
    const Eigen::Index k = word_length;
    Eigen::MatrixXd c(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) c(i, j) = to_double(cov.scaled(static_cast<unsigned>(std::abs(i - j))));

    const double tol = 1e-12 * std::max(1.0, c.diagonal().maxCoeff());
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        double d = c(j, j) - f.row(j).head(j).squaredNorm();
        if (d < -tol)
            throw NotPositiveDefiniteError("covariance matrix is not positive semi-definite: leading minor " +
                                               std::to_string(j + 1) + " fails",
                                           static_cast<std::size_t>(j + 1));
        if (d <= tol) {
            // Dependent direction: the remaining column must already be explained.
            for (Eigen::Index i = j + 1; i < k; ++i) {
                double r = c(i, j) - f.row(i).head(j).dot(f.row(j).head(j));
                if (std::abs(r) > 1e-9 * std::max(1.0, std::abs(c(i, j))))
                    throw NotPositiveDefiniteError("covariance matrix is not positive semi-definite: leading minor " +
                                                       std::to_string(j + 1) + " is singular",
                                                   static_cast<std::size_t>(j + 1));
            }
            continue;
        }
        f(j, j) = std::sqrt(d);
        for (Eigen::Index i = j + 1; i < k; ++i)
            f(i, j) = (c(i, j) - f.row(i).head(j).dot(f.row(j).head(j))) / f(j, j);
    }
    return f;
}

namespace {

std::vector<Eigen::MatrixXd> sample_with_factor(unsigned n, const Eigen::MatrixXd& factor, std::mt19937_64& rng) {
    const auto k = factor.rows();
    std::vector<Eigen::MatrixXd> out(static_cast<std::size_t>(k), Eigen::MatrixXd(n, n));
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd g(k), x(k);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i; j < n; ++j) {
            for (Eigen::Index m = 0; m < k; ++m) g(m) = normal(rng);
            x.noalias() = factor.triangularView<Eigen::Lower>() * g;
            for (Eigen::Index m = 0; m < k; ++m) {
                out[static_cast<std::size_t>(m)](i, j) = x(m);
                out[static_cast<std::size_t>(m)](j, i) = x(m);
            }
        }
    }
    return out;
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

struct DiagonalSampler {
    explicit DiagonalSampler(const DiagonalLaw& law) {
        double acc = 0;
        for (auto& [value, prob] : law.atoms()) {
            values.push_back(to_double(value));
            acc += to_double(prob);
            cumulative.push_back(acc);
        }
    }
    double operator()(std::mt19937_64& rng) const {
        if (values.size() == 1) return values.front();
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            if (u < cumulative[i]) return values[i];
        return values.back();
    }
    std::vector<double> values;
    std::vector<double> cumulative;
};

double one_trial(unsigned n, unsigned k, const Eigen::MatrixXd& factor, const DiagonalSampler& diag,
                 std::mt19937_64 rng) {
    Eigen::VectorXd d(n);
    for (unsigned i = 0; i < n; ++i) d(i) = diag(rng);
    auto gammas = sample_with_factor(n, factor, rng);
    // A_m = G(m) D; the word is D A_1 ... A_k.
    for (auto& g : gammas) g = g * d.asDiagonal();

    double trace = 0;
    if (k == 1) {
        for (unsigned i = 0; i < n; ++i) trace += d(i) * gammas[0](i, i);
    } else {
        Eigen::MatrixXd x = gammas[0];
        for (unsigned m = 1; m + 1 < k; ++m) x = x * gammas[m];
        const Eigen::MatrixXd& last = gammas[k - 1];
        for (unsigned i = 0; i < n; ++i) trace += d(i) * x.row(i).dot(last.col(i));
    }
    return trace / std::pow(static_cast<double>(n), 1.0 + k / 2.0);
}

}  // namespace

std::vector<Eigen::MatrixXd> sample_process(unsigned dimension, unsigned word_length, const CovarianceSpec& cov,
                                            std::mt19937_64& rng) {
    if (dimension == 0 || word_length == 0) throw RangeError("process needs N >= 1 and K >= 1");
    return sample_with_factor(dimension, process_factor(cov, word_length), rng);
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

TraceEstimate empirical_trace(unsigned dimension, unsigned k, const CovarianceSpec& cov, const DiagonalLaw& law,
                              unsigned trials, std::uint64_t seed, unsigned workers) {
    if (k == 0) throw RangeError("word length must be at least 1");
    if (dimension == 0) throw RangeError("matrix dimension must be at least 1");
    if (trials < 2) throw RangeError("need at least 2 trials for a standard error");

    const Eigen::MatrixXd factor = process_factor(cov, k);
    const DiagonalSampler diag(law);
    std::vector<double> values(trials);

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, trials);
    auto run = [&](unsigned w) {
        for (unsigned i = w; i < trials; i += workers) values[i] = one_trial(dimension, k, factor, diag, trial_stream(seed, i));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    TraceEstimate est;
    est.k = k;
    est.dimension = dimension;
    est.trials = trials;
    est.seed = seed;
    est.mean = pairwise_sum(values) / trials;
    std::vector<double> sq(trials);
    for (unsigned i = 0; i < trials; ++i) sq[i] = (values[i] - est.mean) * (values[i] - est.mean);
    const double variance = pairwise_sum(sq) / (trials - 1);
    est.standard_error = std::sqrt(variance / trials);
    return est;
}

Rational limit_trace_combinatorial(unsigned k, const CovarianceSpec& cov, const DiagonalLaw& law, unsigned max_n) {
    const SeriesSpec psi = law.degree_function(k);
    const BareWeights weights = cov.bare_weights(k);
    Rational sum = 0;
    for_each_plane_tree(
        k + 1,
        [&](const PlaneTree& t) {
            Rational w = omega_weight(t, psi);
            if (w == 0) return;
            for (const auto& sub : t.root_subtrees()) w *= bare_value(sub, weights);
            sum += w;
        },
        max_n);
    return sum;
}

Rational limit_trace(unsigned word_length, const CovarianceSpec& cov, const DiagonalLaw& law, unsigned max_n) {
    if (word_length % 2 == 1) return 0;
    return limit_trace_combinatorial(word_length / 2, cov, law, max_n);
}

VerificationReport verify_fond_lemma(const CovarianceSpec& cov, const DiagonalLaw& law, unsigned order, unsigned max_n) {
    if (order < 1) throw RangeError("fundamental lemma check needs order >= 1");
    VerificationReport report;
    report.statement = "sum_k z^k B_{2(k-1)}(r) = z psi_mu(Y)";
    report.parameters = {{"covariance", cov.describe()}, {"law", law.describe()}};
    report.order = order;

    std::vector<Rational> limits(order + 1), y(order + 1);
    for (unsigned k = 1; k <= order; ++k) {
        limits[k] = limit_trace_combinatorial(k - 1, cov, law, max_n);
        y[k] = cov.scaled(2 * k - 1) * limits[k];
    }
    const TruncatedSeries lhs(limits);
    const TruncatedSeries ys(y);
    const TruncatedSeries psi_y = compose_degree_function(law.degree_function(order), ys);
    const TruncatedSeries rhs = TruncatedSeries::variable(order) * psi_y;
    report.absorb(series_equal(lhs, rhs));

    nlohmann::json table = nlohmann::json::array();
    for (unsigned k = 1; k <= order; ++k) table.push_back(to_string(limits[k]));
    report.details["B_2(k-1)"] = table;
    report.details["Y"] = to_json(ys);
    return report;
}

SimComparison compare_sim_limit(unsigned k, const CovarianceSpec& cov, const DiagonalLaw& law, unsigned dimension,
                                unsigned trials, std::uint64_t seed, double slack, unsigned workers) {
    SimComparison out;
    out.exact = limit_trace(k, cov, law);
    out.exact_value = to_double(out.exact);
    out.estimate = empirical_trace(dimension, k, cov, law, trials, seed, workers);
    const double diff = out.estimate.mean - out.exact_value;
    out.z = out.estimate.standard_error > 0 ? diff / out.estimate.standard_error : 0.0;
    out.tolerance = 3.0 * out.estimate.standard_error + slack / dimension;
    out.pass = std::abs(diff) <= out.tolerance;
    return out;
}

}  // namespace bsf
