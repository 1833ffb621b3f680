#include "wks/sincsum.hpp"

#include "wks/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace wks {

namespace {

constexpr double pi = std::numbers::pi;

void check_strip(double x, const char* who) {
    if (!(x >= 0.5 && x <= 1.0)) {
        throw DomainError(std::string(who) + ": x must lie in [1/2, 1]");
    }
}

void check_k(const PowerSumParams& params, long k, const char* who) {
    if (k < static_cast<long>(params.N) + 1) {
        throw DomainError(std::string(who) + ": term index k must satisfy k >= N+1");
    }
}

// sum_k psi_k(x) with tail_bound <= min(abs_tol, params.tol * value).
SumEvaluation tail_series(const PowerSumParams& params, double x, double abs_tol) {
    const double folded = fold_to_half_period(x);
    if (folded == 1.0) {
        return {0.0, 0.0, 1};
    }
    const double sine = std::sin(pi * (1.0 - folded));
    const double factor = std::pow(sine, params.p);
    if (factor == 0.0) {
        return {0.0, 0.0, 1};
    }
    const double n = static_cast<double>(params.N);
    // half of each budget per zeta, measured on the final scale
    const double abs_each = 0.5 * abs_tol / factor;
    const double rel_each = 0.5 * params.tol;
    const SumEvaluation right = hurwitz_zeta(params.p, n + 1.0 - folded, abs_each, rel_each);
    const SumEvaluation left = hurwitz_zeta(params.p, n + folded, abs_each, rel_each);
    return {factor * (right.value + left.value), factor * (right.tail_bound + left.tail_bound),
            right.terms_used + left.terms_used};
}

} // namespace

void PowerSumParams::validate() const {
    if (!(p > 1.0)) {
        throw DivergenceError("sinc power sum diverges for p <= 1 (p = " + std::to_string(p) + ")");
    }
    if (N < 1) {
        throw DomainError("truncation size N must be >= 1");
    }
    if (!(tol > 0.0)) {
        throw ArgumentError("tolerance must be positive");
    }
}

double fold_to_half_period(double x) {
    if (!std::isfinite(x)) {
        throw ArgumentError("non-finite abscissa");
    }
    double r = x - std::floor(x);
    if (r < 0.5) {
        r = 1.0 - r;
    }
    return r;
}

SumEvaluation psi_series(const PowerSumParams& params, double x) {
    params.validate();
    return tail_series(params, x, params.tol);
}

SumEvaluation h_sum(const PowerSumParams& params, double x) {
    params.validate();
    const double scale = std::pow(pi, -params.p);
    const SumEvaluation series = tail_series(params, x, params.tol / scale);
    return {scale * series.value, scale * series.tail_bound, series.terms_used};
}

SumEvaluation full_power_sum(double p, double x, double tol) {
    constexpr int window = 4;
    const PowerSumParams params{p, window, tol};
    params.validate();
    const double folded = fold_to_half_period(x);
    if (folded == 1.0) {
        return {1.0, 0.0, 1};
    }
    // J_x on the strip is {1-N, ..., N}
    double head = 0.0;
    for (int n = 1 - window; n <= window; ++n) {
        head += std::pow(std::abs(sinc(folded - n)), p);
    }
    const SumEvaluation tail = h_sum(params, folded);
    return {head + tail.value, tail.tail_bound, tail.terms_used + 2 * window};
}

double psi_term(const PowerSumParams& params, long k, double x) {
    params.validate();
    check_k(params, k, "psi_term");
    check_strip(x, "psi_term");
    const double kd = static_cast<double>(k);
    const double sine = std::sin(pi * (1.0 - x));
    return std::pow(sine, params.p) * (std::pow(kd - x, -params.p) + std::pow(kd + x - 1.0, -params.p));
}

double psi_term_derivative(const PowerSumParams& params, long k, double x) {
    params.validate();
    check_k(params, k, "psi_term_derivative");
    check_strip(x, "psi_term_derivative");
    const double p = params.p;
    const double kd = static_cast<double>(k);
    const double sine = std::sin(pi * (1.0 - x));
    const double cosine = std::cos(pi * x);
    const double right = kd - x;
    const double left = kd + x - 1.0;
    const double level = std::pow(right, -p) + std::pow(left, -p);
    const double slope = std::pow(right, -p - 1.0) - std::pow(left, -p - 1.0);
    return p * std::pow(sine, p - 1.0) * (pi * cosine * level + sine * slope);
}

double h_second_derivative_at_half(double p, int N) {
    PowerSumParams{p, N, 1.0}.validate();
    const double lead = 2.0 * N + 1.0;
    const double mu_p = incomplete_lambda_scaled(p, N);
    const double mu_p2 = incomplete_lambda_scaled(p + 2.0, N);
    // lambda(s; N) = lead^{-s} mu(s)
    const double bracket = 4.0 * (p + 1.0) * mu_p2 / (lead * lead) - pi * pi * mu_p;
    return 2.0 * p * std::pow(2.0 / lead, p) * bracket;
}

} // namespace wks
