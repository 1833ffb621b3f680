#pragma once

#include <span>
#include <vector>

namespace wks {

/// Separated sampling geometry: per-axis exponential types sigma_l > 0 and separations delta_l > 0.
struct SamplingGeometry {
    std::vector<double> sigmas;
    std::vector<double> deltas;

    int dimension() const { return static_cast<int>(sigmas.size()); }
    void validate() const;

    /// sigma_l = pi, delta_l = 1 on every axis (the integer lattice).
    static SamplingGeometry regular(int d);
};

/// Per-axis truncation sizes N_j and the Hoelder exponent q of the signal class.
///
/// Valid when q >= 1 + 1/(pi^2 (Ntilde + 1/2)^2 - 2) with Ntilde = min_j N_j; this keeps the
/// conjugate p = q/(q-1) within the sharp tail-bound range p <= pi^2 (Ntilde + 1/2)^2 - 1.
struct TruncationConfig {
    std::vector<int> Ns;
    double q = 2.0;

    int dimension() const { return static_cast<int>(Ns.size()); }
    int n_tilde() const;
    /// Throws ArgumentError for an empty or non-positive Ns, PreconditionError (naming the
    /// violated inequality) when q is below the threshold.
    void validate() const;
};

/// Sum bound for sum_n |sinc(x-n)|^p: 1 + (2/pi)^p p/(p-1) for 1 < p < 2, and 1 for p >= 2.
double cp_constant(double p);

/// Plancherel-Polya constant (8/(r pi))^d prod_l (exp(r delta_l sigma_l / 2) - 1)/(sigma_l delta_l^2), r >= 1.
double pp_constant(const SamplingGeometry& geometry, double r);

/// q/(q-1).
double hoelder_conjugate(double q);

/// pi^2 (N + 1/2)^2 - 1: largest p for which the sharp tail bound holds.
double sharp_tail_threshold(int N);

/// 1 + 1/(pi^2 (N + 1/2)^2 - 2): smallest admissible q for truncation size N.
double q_threshold(int N);

/// 2 (2/pi)^p lambda(p; N), attained by h_{p,N} at x = 1/2. Throws PreconditionError above the threshold.
double sharp_tail_bound(double p, int N);

/// Bound on the d-dimensional out-of-window sinc power sum:
///   cp_constant(p)^{d-1} sum_j sharp_tail_bound(p, N_j).
double kernel_tail_bound(double p, std::span<const int> Ns);

/// C(N, d, q) on the integer lattice, so that |f(x) - Y(f; x)| <= C ||f||_q for every x.
double truncation_constant(const TruncationConfig& config);

/// sqrt(1 - prod_j (1 - (8/pi^2) lambda(2; N_j))), the L^2 bound valid for every N.
double l2_truncation_bound(std::span<const int> Ns);

/// (2N+1)^{1-p} (1/(2N+1) + 1/(2(p-1))) >= lambda(p; N).
double lambda_decay_bound(double p, int N);

} // namespace wks
