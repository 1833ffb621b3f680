#include "wks/quadrature.hpp"

#include "wks/errors.hpp"
#include "wks/specfun.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace wks {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kQuadTol = 1e-13;

using Integrator = boost::math::quadrature::tanh_sinh<double>;

Integrator& integrator() {
    thread_local Integrator instance;
    return instance;
}

template <class F>
double integrate(F&& f, double a, double b) {
    return integrator().integrate(f, a, b, kQuadTol);
}

} // namespace

double sine_power_mean(double alpha) {
    return std::exp(std::lgamma((alpha + 1.0) / 2.0) - std::lgamma(alpha / 2.0 + 1.0)) / std::sqrt(pi);
}

double sinc_power_integral(double alpha) {
    if (!(alpha > 1.0)) {
        throw DivergenceError("sinc_power_integral: |sinc|^alpha is not integrable for alpha <= 1");
    }
    constexpr int cells = 32;
    double body = 0.0;
    for (int m = 0; m < cells; ++m) {
        body += integrate([alpha](double x) { return std::pow(std::abs(sinc(x)), alpha); }, m, m + 1.0);
    }
    const double tail = std::pow(pi, -alpha) * integrate(
                                                   [alpha](double u) {
                                                       const double s = std::abs(sin_pi(u));
                                                       if (s == 0.0) {
                                                           return 0.0;
                                                       }
                                                       return std::pow(s, alpha) *
                                                              hurwitz_zeta(alpha, cells + u, 1e-16).value;
                                                   },
                                                   0.0, 1.0);
    return 2.0 * (body + tail);
}

double sinc_combination_power_integral(std::span<const long> shifts, std::span<const double> coeffs, double q) {
    if (shifts.size() != coeffs.size() || shifts.empty()) {
        throw ArgumentError("sinc combination needs equally many (>= 1) shifts and coefficients");
    }
    if (!(q > 1.0)) {
        throw DivergenceError("sinc combination power integral requires q > 1");
    }
    // moments S_k = sum_i c_i (-1)^{n_i} n_i^k
    std::array<double, 4> moments{};
    long reach = 0;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        const double sign = (shifts[i] % 2 == 0) ? 1.0 : -1.0;
        double power = 1.0;
        for (double& moment : moments) {
            moment += coeffs[i] * sign * power;
            power *= static_cast<double>(shifts[i]);
        }
        reach = std::max(reach, std::abs(shifts[i]));
    }
    if (moments[0] == 0.0) {
        throw DomainError("sinc combination with sum_i c_i (-1)^{n_i} = 0 is not supported by the tail expansion");
    }

    auto value = [&](double x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < shifts.size(); ++i) {
            acc += coeffs[i] * sinc(x - static_cast<double>(shifts[i]));
        }
        return std::pow(std::abs(acc), q);
    };
    // kernel part r(x) = sum_i c_i (-1)^{n_i} / (x - n_i); f(x) = sin(pi x) r(x) / pi
    auto kernel = [&](double x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < shifts.size(); ++i) {
            const double sign = (shifts[i] % 2 == 0) ? 1.0 : -1.0;
            acc += coeffs[i] * sign / (x - static_cast<double>(shifts[i]));
        }
        return std::pow(std::abs(acc), q);
    };

    const long near = reach + 32;
    const long far = 2048 + 4 * reach;
    double body = 0.0;
    for (long m = -near; m < near; ++m) {
        body += integrate(value, static_cast<double>(m), static_cast<double>(m + 1));
    }

    // |r(y)|^q ~ |S_0|^q y^{-q} (1 + e_1/y + e_2/y^2 + e_3/y^3) for y -> +inf; for y -> -inf the odd
    // moments flip sign.
    auto expansion = [&](double sign) {
        const double b1 = sign * moments[1] / moments[0];
        const double b2 = moments[2] / moments[0];
        const double b3 = sign * moments[3] / moments[0];
        return std::array<double, 3>{
            q * b1,
            q * b2 + q * (q - 1.0) / 2.0 * b1 * b1,
            q * b3 + q * (q - 1.0) * b1 * b2 + q * (q - 1.0) * (q - 2.0) / 6.0 * b1 * b1 * b1,
        };
    };
    const auto plus = expansion(1.0);
    const auto minus = expansion(-1.0);
    const double lead = std::pow(std::abs(moments[0]), q);

    auto tail_integrand = [&](double u) {
        const double s = std::abs(sin_pi(u));
        if (s == 0.0) {
            return 0.0;
        }
        double cells = 0.0;
        for (long m = near; m < far; ++m) {
            const double y = static_cast<double>(m) + u;
            cells += kernel(y) + kernel(-y);
        }
        const double start = static_cast<double>(far) + u;
        double asymptotic = 2.0 * hurwitz_zeta(q, start, 1e-16).value;
        for (int j = 0; j < 3; ++j) {
            asymptotic += (plus[j] + minus[j]) * hurwitz_zeta(q + j + 1.0, start, 1e-16).value;
        }
        return std::pow(s, q) * (cells + lead * asymptotic);
    };
    const double tail = std::pow(pi, -q) * integrate(tail_integrand, 0.0, 1.0);
    return body + tail;
}

} // namespace wks
