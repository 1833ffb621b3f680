#pragma once

#include <cstddef>

namespace wks {

/// Value of a truncated series together with a rigorous bound on the omitted part.
struct SumEvaluation {
    double value = 0.0;
    double tail_bound = 0.0;
    std::size_t terms_used = 0;
};

/// Arguments of the incomplete Lambda function lambda(s; a) = sum_{n>=1} (2(n+a)-1)^{-s}.
struct LambdaQuery {
    double s = 2.0;
    double a = 0.0;
    double tol = 1e-12;

    /// Throws DivergenceError for s <= 1 and ArgumentError for a < 0 or tol <= 0.
    void validate() const;
};

/// sin(pi x) with the argument reduced exactly; zero at integers.
double sin_pi(double x);

/// Normalized sinc, sin(pi x)/(pi x), with sinc(0) = 1. Exactly 0 at nonzero integers.
double sinc(double x);

/// Hurwitz zeta zeta(s, q) = sum_{n>=0} (q+n)^{-s} for s > 1, q > 0.
///
/// Terms are summed directly while the integral tail bound shrinks fast enough,
/// otherwise an Euler-Maclaurin tail is attached; its remainder is bounded by the
/// first omitted correction because (q+x)^{-s} is completely monotone. The
/// evaluation stops once tail_bound <= tol * min(1, value).
SumEvaluation hurwitz_zeta(double s, double q, double tol);

/// As above with separate budgets: stops once tail_bound <= min(abs_tol, rel_tol * value).
SumEvaluation hurwitz_zeta(double s, double q, double abs_tol, double rel_tol);

/// q^s * zeta(s, q), which is >= 1 and never underflows; tail_bound is relative to it.
SumEvaluation hurwitz_zeta_scaled(double s, double q, double rel_tol);

/// lambda(s; a) with tail_bound <= tol * min(1, value).
SumEvaluation incomplete_lambda(const LambdaQuery& query);

/// Shorthand returning only the value at tolerance 1e-15.
double incomplete_lambda(double s, double a);

/// (2a+1)^s * lambda(s; a): the series normalized by its leading term, always >= 1.
double incomplete_lambda_scaled(double s, double a, double rel_tol = 1e-15);

/// d/ds log lambda(s; a), summed term-wise. Intended for s >= 2.
double incomplete_lambda_log_derivative(double s, double a);

} // namespace wks
