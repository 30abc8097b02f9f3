#pragma once

#include "bsf/polynomial.hpp"
#include "bsf/rational.hpp"
#include "bsf/report.hpp"
#include "bsf/series.hpp"
#include "bsf/trees.hpp"

#include <vector>

namespace bsf {

/// Which kernel the iterated integral starts with: x integrates children over [0, u],
/// y over [u, 1]. Levels alternate.
enum class Parity { x, y };

/// phi^x_u(t) / phi^y_u(t) as an exact polynomial in u; 1 on a single node.
/// Throws std::logic_error if the degree exceeds |t| - 1.
Polynomial phi_iterated(const PlaneTree& t, Parity parity);

struct MomentPair {
    Rational x_start;
    Rational y_start;
};

/// sum over plane trees on n+1 nodes of int_0^1 phi(t), from both kernels. n = 0 gives 1.
MomentPair dh_moment_both(unsigned n, unsigned max_n = default_max_tree_size());

/// tau((T T*)^n) via the x-start sum; throws std::logic_error if the y-start sum differs.
Rational dh_moment(unsigned n, unsigned max_n = default_max_tree_size());

/// n^n / (n+1)!.
Rational dh_closed_form(unsigned n);

/// dh_moment(n) = n^n/(n+1)! and x-start = y-start for 1 <= n <= n_max.
VerificationReport verify_dk8_closed_form(unsigned n_max, unsigned max_n = default_max_tree_size());

/// Y_0(s) = sum_{n>=1} s^n tau((T T*)^(n-1)) to the given order, from the tree sums.
TruncatedSeries dh_generating_series(unsigned order, unsigned max_n = default_max_tree_size());

/// G(s/(1 - Y_0(s))) = s with G(z) = z e^(-z), and s/(1 - Y_0) = sum n^(n-1) s^n / n!.
VerificationReport verify_dk8_inversion(unsigned order, unsigned max_n = default_max_tree_size());

/// Floating-point residual of the closed-form solutions X_u(s) = 1 - e^(lambda u),
/// Y_u(s) = 1 - e^(-lambda (u - 1)), lambda + s e^(-lambda) = 0, plugged into the integral
/// system with psi(z) = 1/(1-z). Also compares Y_0(s) against the moment series.
struct ClosedFormResidual {
    double integral_system = 0;
    double moment_series = 0;
    double max() const { return integral_system > moment_series ? integral_system : moment_series; }
};
ClosedFormResidual closed_form_solution_residual(const std::vector<double>& s_grid, const std::vector<double>& u_grid);

}  // namespace bsf
