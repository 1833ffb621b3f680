#include "wks/bounds.hpp"

#include "wks/errors.hpp"
#include "wks/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace wks {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double pi2 = pi * pi;

// Admissible rounding when q sits exactly on its threshold (64 ulps).
constexpr double kSlack = 64.0 * std::numeric_limits<double>::epsilon();

void check_N(int N) {
    if (N < 1) {
        throw DomainError("truncation size N must be >= 1");
    }
}

} // namespace

void SamplingGeometry::validate() const {
    if (sigmas.empty() || sigmas.size() != deltas.size()) {
        throw ArgumentError("sampling geometry needs equally many (>= 1) sigmas and deltas");
    }
    for (std::size_t l = 0; l < sigmas.size(); ++l) {
        if (!(sigmas[l] > 0.0) || !(deltas[l] > 0.0) || !std::isfinite(sigmas[l]) || !std::isfinite(deltas[l])) {
            throw DomainError("sampling geometry requires sigma_l > 0 and delta_l > 0");
        }
    }
}

SamplingGeometry SamplingGeometry::regular(int d) {
    if (d < 1) {
        throw ArgumentError("dimension must be >= 1");
    }
    return {std::vector<double>(d, pi), std::vector<double>(d, 1.0)};
}

int TruncationConfig::n_tilde() const {
    if (Ns.empty()) {
        throw ArgumentError("truncation sizes must not be empty");
    }
    return *std::min_element(Ns.begin(), Ns.end());
}

void TruncationConfig::validate() const {
    if (Ns.empty()) {
        throw ArgumentError("truncation sizes must not be empty");
    }
    for (int N : Ns) {
        if (N < 1) {
            throw ArgumentError("every truncation size N_j must be >= 1");
        }
    }
    if (!std::isfinite(q) || !(q > 1.0)) {
        throw PreconditionError("q must be a finite number > 1");
    }
    const int nt = n_tilde();
    const double threshold = q_threshold(nt);
    if (q < threshold * (1.0 - kSlack)) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "q = " << q << " violates q >= 1 + 1/(pi^2 (Ntilde + 1/2)^2 - 2) = " << threshold
            << " for Ntilde = " << nt;
        throw PreconditionError(msg.str());
    }
}

double cp_constant(double p) {
    if (!(p > 1.0)) {
        throw DomainError("cp_constant: p must exceed 1");
    }
    if (p >= 2.0) {
        return 1.0;
    }
    return 1.0 + std::pow(2.0 / pi, p) * p / (p - 1.0);
}

double pp_constant(const SamplingGeometry& geometry, double r) {
    geometry.validate();
    if (!(r >= 1.0) || !std::isfinite(r)) {
        throw DomainError("pp_constant: r must be >= 1");
    }
    double value = 1.0;
    for (int l = 0; l < geometry.dimension(); ++l) {
        const double sigma = geometry.sigmas[l];
        const double delta = geometry.deltas[l];
        value *= 8.0 / (r * pi) * std::expm1(r * delta * sigma / 2.0) / (sigma * delta * delta);
    }
    return value;
}

double hoelder_conjugate(double q) {
    if (!(q > 1.0)) {
        throw DomainError("Hoelder conjugate needs q > 1");
    }
    return q / (q - 1.0);
}

double sharp_tail_threshold(int N) {
    check_N(N);
    const double half = N + 0.5;
    return pi2 * half * half - 1.0;
}

double q_threshold(int N) {
    check_N(N);
    const double half = N + 0.5;
    return 1.0 + 1.0 / (pi2 * half * half - 2.0);
}

double sharp_tail_bound(double p, int N) {
    check_N(N);
    if (!(p > 1.0)) {
        throw DomainError("sharp_tail_bound: p must exceed 1");
    }
    const double threshold = sharp_tail_threshold(N);
    if (p > threshold * (1.0 + kSlack)) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "sharp_tail_bound: p = " << p << " exceeds pi^2 (N + 1/2)^2 - 1 = " << threshold << " for N = " << N;
        throw PreconditionError(msg.str());
    }
    return 2.0 * std::pow(2.0 / pi, p) * incomplete_lambda(p, N);
}

double kernel_tail_bound(double p, std::span<const int> Ns) {
    if (Ns.empty()) {
        throw ArgumentError("kernel_tail_bound: empty truncation sizes");
    }
    double tails = 0.0;
    for (int N : Ns) {
        tails += sharp_tail_bound(p, N);
    }
    return std::pow(cp_constant(p), static_cast<double>(Ns.size()) - 1.0) * tails;
}

double truncation_constant(const TruncationConfig& config) {
    config.validate();
    const double q = config.q;
    const double p = hoelder_conjugate(q);
    const double d = static_cast<double>(config.dimension());
    const double pp = pp_constant(SamplingGeometry::regular(config.dimension()), q);
    // sum_j lambda(p; N_j) = (2 Ntilde + 1)^{-p} sum_j ((2 Ntilde + 1)/(2 N_j + 1))^p mu(p; N_j), and its
    // 1/p-th power is taken without forming (2 Ntilde + 1)^{-p}, which underflows for large p
    const double lead = 2.0 * config.n_tilde() + 1.0;
    double scaled = 0.0;
    for (int N : config.Ns) {
        scaled += std::pow(lead / (2.0 * N + 1.0), p) * incomplete_lambda_scaled(p, N);
    }
    const double exponent = 1.0 - 1.0 / q;
    return std::pow(2.0, 2.0 - 1.0 / q) / pi * std::pow(cp_constant(p), (d - 1.0) * exponent) *
           std::pow(pp, 1.0 / q) * std::pow(scaled, exponent) / lead;
}

double l2_truncation_bound(std::span<const int> Ns) {
    if (Ns.empty()) {
        throw DomainError("l2_truncation_bound: empty truncation sizes");
    }
    double kept = 1.0;
    for (int N : Ns) {
        check_N(N);
        kept *= 1.0 - 8.0 / pi2 * incomplete_lambda(2.0, N);
    }
    return std::sqrt(1.0 - kept);
}

double lambda_decay_bound(double p, int N) {
    check_N(N);
    if (!(p > 1.0)) {
        throw DomainError("lambda_decay_bound: p must exceed 1");
    }
    const double lead = 2.0 * N + 1.0;
    return std::pow(lead, 1.0 - p) * (1.0 / lead + 1.0 / (2.0 * (p - 1.0)));
}

} // namespace wks
