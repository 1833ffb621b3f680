#pragma once

#include "wks/kernels.hpp"

#include <cstddef>
#include <string_view>

namespace wks {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Root p* of 4(p+1) lambda(p+2; N) - pi^2 lambda(p; N) = 0.
struct PstarResult {
    double value = 0.0;
    Interval bracket;
    /// Raw left-hand side at the root (tiny: both lambdas decay like (2N+1)^{-p}).
    double residual = 0.0;
    /// Same quantity divided by lambda(p; N); O(1) and used for all sign decisions.
    double scaled_residual = 0.0;
    int iterations = 0;
};

enum class ExtremumKind { local_max, local_min, degenerate };

std::string_view to_string(ExtremumKind kind);

struct ExtremumReport {
    double abscissa = 0.5;
    double value = 0.0;
    ExtremumKind kind = ExtremumKind::degenerate;
    /// Second derivative of sum_k psi_k at the abscissa (pi^p times that of h_{p,N}).
    double second_derivative = 0.0;
    /// Whether the abscissa is x = 1/2 (to grid resolution for scans).
    bool at_half = true;
};

/// Lower bound on p*: (1/8)(pi^2(2N+1)^2 - 12 + sqrt((pi^2(2N+1)^2 - 12)^2 - 128)).
double pstar_lower_bound(int N);

/// Upper bound on p*.
double pstar_upper_bound(int N);

/// g(p) = 4(p+1) lambda(p+2;N)/lambda(p;N) - pi^2. Has the sign of h''_{p,N}(1/2).
double pstar_residual(double p, int N);

/// Bisection on g over [pstar_lower_bound, pstar_upper_bound] (at most 200 steps) and one
/// Newton polish. Throws BracketError if g does not change sign on the bracket.
PstarResult solve_pstar(int N, double tol = 1e-13);

/// Local nature of x = 1/2. Degenerate when |g(p)| < 1e-9 (1 + p).
ExtremumReport classify_half_point(double p, int N);

/// Smallest N >= 1 with N >= sqrt((p+2)(1+1/p))/pi - 1/2, which forces a local maximum at 1/2.
int corollary_min_N_for_max(double p);

/// Unique root A_k in (1/2, 1) of cot(pi x) = -1/(pi (k - x)); tol bounds the abscissa error.
double solve_A_k(long k, double tol = 1e-15);

/// Exponent for which x_star in (1/2, A_k) is a stationary point of psi_k.
double tilde_p(long k, double x_star);

/// Left minus right side of the psi_k stationarity condition
///   pi cot(pi x) ((k-x)^{-p} + (k+x-1)^{-p}) = (k+x-1)^{-p-1} - (k-x)^{-p-1}.
double stationarity_residual(double p, long k, double x);

/// Global maximum of h_{p,N} over [1/2, 1): grid scan (grid_points >= 64) then golden-section
/// refinement around the best cell.
ExtremumReport scan_max(double p, int N, std::size_t grid_points = 4096, Execution exec = Execution::parallel);

} // namespace wks
