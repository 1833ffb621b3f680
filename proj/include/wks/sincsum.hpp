#pragma once

#include "wks/specfun.hpp"

namespace wks {

/// Exponent, truncation size and tolerance for the sinc power sums.
///
/// The index window around x is J_x = {n : |x - n| <= N}.
struct PowerSumParams {
    double p = 2.0;
    int N = 1;
    double tol = 1e-12;

    /// Throws DivergenceError for p <= 1, DomainError for N < 1, ArgumentError for tol <= 0.
    void validate() const;
};

/// Maps x onto the canonical strip [1/2, 1] using 1-periodicity and the symmetry about 1/2.
double fold_to_half_period(double x);

/// sum_{n in Z} |sinc(x - n)|^p.
SumEvaluation full_power_sum(double p, double x, double tol = 1e-12);

/// h_{p,N}(x) = sum_{n not in J_x} |sinc(x - n)|^p.
///
/// Evaluated on the folded abscissa as
///   pi^{-p} sin^p(pi x) [zeta(p, N+1-x) + zeta(p, N+x)],
/// i.e. pi^{-p} times the sum of the psi_k terms below. Exactly 0 at integers.
SumEvaluation h_sum(const PowerSumParams& params, double x);

/// sum_k psi_k(x) = pi^p h_{p,N}(x), the tail series without the pi^{-p} factor.
SumEvaluation psi_series(const PowerSumParams& params, double x);

/// psi_k(x) = sin^p(pi x) [(k-x)^{-p} + (k+x-1)^{-p}] for k >= N+1 and x in [1/2, 1].
double psi_term(const PowerSumParams& params, long k, double x);

/// Closed-form derivative of psi_k on [1/2, 1].
double psi_term_derivative(const PowerSumParams& params, long k, double x);

/// Second derivative of sum_k psi_k at x = 1/2:
///   2^{p+1} p (4(p+1) lambda(p+2; N) - pi^2 lambda(p; N)).
/// Multiply by pi^{-p} for the second derivative of h_{p,N}. Underflows to 0 for very large p;
/// use extrema::pstar_residual for its sign there.
double h_second_derivative_at_half(double p, int N);

} // namespace wks
