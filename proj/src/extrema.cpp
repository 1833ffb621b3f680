#include "wks/extrema.hpp"

#include "wks/errors.hpp"
#include "wks/sincsum.hpp"
#include "wks/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace wks {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double pi2 = pi * pi;

void check_N(int N) {
    if (N < 1) {
        throw DomainError("truncation size N must be >= 1");
    }
}

double pstar_residual_derivative(double p, int N) {
    const double lead = 2.0 * N + 1.0;
    const double ratio = incomplete_lambda_scaled(p + 2.0, N) / incomplete_lambda_scaled(p, N) / (lead * lead);
    const double dlog = incomplete_lambda_log_derivative(p + 2.0, N) - incomplete_lambda_log_derivative(p, N);
    return 4.0 * ratio + 4.0 * (p + 1.0) * ratio * dlog;
}

// Maximizes f on [a, b] by golden-section search.
template <class F>
double golden_section_max(F&& f, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? c : d;
}

} // namespace

std::string_view to_string(ExtremumKind kind) {
    switch (kind) {
    case ExtremumKind::local_max:
        return "local-max";
    case ExtremumKind::local_min:
        return "local-min";
    case ExtremumKind::degenerate:
        return "degenerate";
    }
    return "unknown";
}

double pstar_lower_bound(int N) {
    check_N(N);
    const double m = pi2 * (2.0 * N + 1.0) * (2.0 * N + 1.0) - 12.0;
    return (m + std::sqrt(m * m - 128.0)) / 8.0;
}

double pstar_upper_bound(int N) {
    check_N(N);
    const double n1 = (N + 1.0) * (N + 1.0);
    const double radicand = 72.0 * pi2 * n1 * (2.0 * pi2 * n1 - 2.0 - pi2) + 4.0 + 36.0 * pi2 + 9.0 * pi2 * pi2;
    return std::sqrt(radicand) / 4.0 + 3.0 * pi2 * n1 - 0.75 * (2.0 + pi2);
}

double pstar_residual(double p, int N) {
    check_N(N);
    const double lead = 2.0 * N + 1.0;
    return 4.0 * (p + 1.0) * incomplete_lambda_scaled(p + 2.0, N) / incomplete_lambda_scaled(p, N) / (lead * lead) -
           pi2;
}

PstarResult solve_pstar(int N, double tol) {
    check_N(N);
    if (!(tol > 0.0)) {
        throw ArgumentError("solve_pstar: tolerance must be positive");
    }
    PstarResult result;
    result.bracket = {pstar_lower_bound(N), pstar_upper_bound(N)};
    double lo = result.bracket.lo;
    double hi = result.bracket.hi;
    double g_lo = pstar_residual(lo, N);
    const double g_hi = pstar_residual(hi, N);
    if (!(g_lo < 0.0 && g_hi > 0.0)) {
        throw BracketError("solve_pstar: residual does not change sign on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "] for N = " + std::to_string(N));
    }
    int iterations = 0;
    while (iterations < 200 && hi - lo > tol * std::max(1.0, std::abs(lo))) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = pstar_residual(mid, N);
        ++iterations;
        if (g_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if (g_mid < 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    double root = 0.5 * (lo + hi);
    double g_root = pstar_residual(root, N);
    // one Newton step, kept only if it stays in the bracket and improves the residual
    const double slope = pstar_residual_derivative(root, N);
    if (slope != 0.0 && std::isfinite(slope)) {
        const double candidate = root - g_root / slope;
        if (candidate >= lo && candidate <= hi) {
            const double g_candidate = pstar_residual(candidate, N);
            if (std::abs(g_candidate) < std::abs(g_root)) {
                root = candidate;
                g_root = g_candidate;
            }
        }
    }
    result.value = root;
    result.scaled_residual = g_root;
    result.residual = g_root * incomplete_lambda(root, N);
    result.iterations = iterations;
    return result;
}

ExtremumReport classify_half_point(double p, int N) {
    const PowerSumParams params{p, N, 1e-14};
    params.validate();
    ExtremumReport report;
    report.abscissa = 0.5;
    report.at_half = true;
    report.value = h_sum(params, 0.5).value;
    report.second_derivative = h_second_derivative_at_half(p, N);
    const double g = pstar_residual(p, N);
    if (std::abs(g) < 1e-9 * (1.0 + std::abs(p))) {
        report.kind = ExtremumKind::degenerate;
    } else {
        report.kind = g < 0.0 ? ExtremumKind::local_max : ExtremumKind::local_min;
    }
    return report;
}

int corollary_min_N_for_max(double p) {
    if (!(p > 1.0)) {
        throw DomainError("corollary_min_N_for_max: p must exceed 1");
    }
    const double threshold = std::sqrt((p + 2.0) * (1.0 + 1.0 / p)) / pi - 0.5;
    return std::max(1, static_cast<int>(std::ceil(threshold)));
}

double solve_A_k(long k, double tol) {
    if (k < 2) {
        throw DomainError("solve_A_k: k must be >= 2");
    }
    if (!(tol > 0.0)) {
        throw ArgumentError("solve_A_k: tolerance must be positive");
    }
    const double kd = static_cast<double>(k);
    // cot(pi x) + 1/(pi (k-x)) multiplied by sin(pi x) pi (k-x) > 0
    auto sign_fn = [kd](double x) { return std::cos(pi * x) * pi * (kd - x) + std::sin(pi * x); };
    double lo = 0.5;
    double hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (sign_fn(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double tilde_p(long k, double x_star) {
    if (k < 2) {
        throw DomainError("tilde_p: k must be >= 2");
    }
    if (!(x_star > 0.5 && x_star < 1.0)) {
        throw DomainError("tilde_p: x_star must lie in (1/2, A_k)");
    }
    const double kd = static_cast<double>(k);
    const double c = pi * (kd + x_star - 1.0) / std::tan(pi * x_star);
    const double num = 1.0 - c;
    const double den = c - 1.0 + (2.0 * kd - 1.0) / (kd - x_star);
    if (!(den > 0.0) || !(num > 0.0)) {
        throw DomainError("tilde_p: x_star = " + std::to_string(x_star) + " is not below A_" + std::to_string(k));
    }
    // log(num/den) written as log1p to keep digits as x_star -> 1/2
    const double log_ratio = std::log1p((num - den) / den);
    return log_ratio / std::log1p((2.0 * x_star - 1.0) / (kd - x_star));
}

double stationarity_residual(double p, long k, double x) {
    const double kd = static_cast<double>(k);
    const double right = kd - x;
    const double left = kd + x - 1.0;
    const double lhs = pi / std::tan(pi * x) * (std::pow(right, -p) + std::pow(left, -p));
    const double rhs = std::pow(left, -p - 1.0) - std::pow(right, -p - 1.0);
    return lhs - rhs;
}

ExtremumReport scan_max(double p, int N, std::size_t grid_points, Execution exec) {
    const PowerSumParams params{p, N, 1e-14};
    params.validate();
    if (grid_points < 64) {
        throw ArgumentError("scan_max: grid_points must be >= 64");
    }
    const double step = 0.5 / static_cast<double>(grid_points);
    std::vector<double> xs(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        xs[i] = 0.5 + step * static_cast<double>(i);
    }
    const std::vector<double> values = tabulate_h_sum(p, N, xs, params.tol, exec);
    const std::size_t best = argmax_first(values);

    auto h = [&params](double x) { return h_sum(params, x).value; };
    const double a = best == 0 ? 0.5 : xs[best - 1];
    const double b = best + 1 < grid_points ? xs[best + 1] : 1.0;
    double abscissa = golden_section_max(h, a, b, 1e-10);
    double value = h(abscissa);
    if (values[best] >= value) {
        abscissa = xs[best];
        value = values[best];
    }

    ExtremumReport report;
    report.abscissa = abscissa;
    report.value = value;
    report.at_half = std::abs(abscissa - 0.5) <= step;
    report.kind = ExtremumKind::local_max;
    if (report.at_half) {
        report.second_derivative = h_second_derivative_at_half(p, N);
    } else {
        const double d = 1e-4;
        const double scale = std::pow(pi, p);
        report.second_derivative = scale * (h(abscissa + d) - 2.0 * value + h(abscissa - d)) / (d * d);
    }
    return report;
}

} // namespace wks
