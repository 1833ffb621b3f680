#include "wks/specfun.hpp"

#include "wks/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace wks {

namespace {

constexpr double pi = std::numbers::pi;

// B_{2j} / (2j)! for j = 1..20.
constexpr std::array<double, 20> kBernoulliOverFactorial = {
    8.33333333333333287e-02,  -1.38888888888888894e-03, 3.30687830687830710e-05,  -8.26719576719576754e-07,
    2.08767569878681002e-08,  -5.28419013868749322e-10, 1.33825365306846789e-11,  -3.38968029632258272e-13,
    8.58606205627784517e-15,  -2.17486869855806192e-16, 5.50900282836022953e-18,  -1.39544646858125223e-19,
    3.53470703962946728e-21,  -8.95351742703754628e-23, 2.26795245233768293e-24,  -5.74479066887220246e-26,
    1.45517247561486496e-27,  -3.68599494066531029e-29, 9.33673425709504507e-31,  -2.36502241570062995e-32,
};

constexpr std::size_t kMaxDirectTerms = std::size_t{1} << 23;

// Euler-Maclaurin tail sum_{n>=M} (q+n)^{-s}, scaled by q^s, with a = q + M.
// Returns false when the asymptotic corrections stop decreasing before reaching the target.
bool euler_maclaurin_tail(double s, double q, double a, double head, double abs_cap, double rel_tol, double& tail,
                          double& bound, std::size_t& corrections) {
    const double base = std::pow(q / a, s);
    tail = a * base / (s - 1.0) + 0.5 * base;
    double rising = s;          // (s)_{2j-1}
    double inv_a_pow = 1.0 / a; // a^{1-2j}
    const double inv_a2 = inv_a_pow * inv_a_pow;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
        const double term = kBernoulliOverFactorial[j] * rising * base * inv_a_pow;
        const double magnitude = std::abs(term);
        const double target = std::min(abs_cap, rel_tol * (head + tail));
        if (magnitude <= target) {
            bound = magnitude;
            corrections = j;
            return true;
        }
        if (magnitude >= previous) {
            return false;
        }
        previous = magnitude;
        tail += term;
        const double k = static_cast<double>(2 * j + 1);
        rising *= (s + k) * (s + k + 1.0);
        inv_a_pow *= inv_a2;
    }
    return false;
}

SumEvaluation hurwitz_core(double s, double q, double abs_cap, double rel_tol) {
    if (!(s > 1.0)) {
        throw DivergenceError("zeta-type series diverges for s <= 1 (s = " + std::to_string(s) + ")");
    }
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw ArgumentError("zeta-type series requires a finite shift q > 0");
    }
    if (!(rel_tol > 0.0) || !(abs_cap > 0.0)) {
        throw ArgumentError("tolerance must be positive");
    }
    double head = 0.0;
    std::size_t next_em = 2;
    for (std::size_t k = 0; k < kMaxDirectTerms; ++k) {
        const double a = q + static_cast<double>(k);
        const double term = std::pow(q / a, s);
        head += term;
        // tail after term k lies between the integrals from k+1 and from k
        const double upper = a * term / (s - 1.0);
        const double lower = (a + 1.0) * std::pow(q / (a + 1.0), s) / (s - 1.0);
        const double estimate = head + 0.5 * (upper + lower);
        const double half_width = 0.5 * (upper - lower);
        if (half_width <= std::min(abs_cap, rel_tol * estimate)) {
            return {estimate, half_width, k + 1};
        }
        if (k + 1 == next_em) {
            next_em *= 2;
            double tail = 0.0;
            double bound = 0.0;
            std::size_t corrections = 0;
            if (euler_maclaurin_tail(s, q, a + 1.0, head, abs_cap, rel_tol, tail, bound, corrections)) {
                return {head + tail, bound, k + 1 + corrections};
            }
        }
    }
    throw DivergenceError("zeta-type series did not reach the requested tolerance");
}

} // namespace

void LambdaQuery::validate() const {
    if (!(s > 1.0)) {
        throw DivergenceError("incomplete Lambda series diverges for s <= 1 (s = " + std::to_string(s) + ")");
    }
    if (!(a >= 0.0) || !std::isfinite(a)) {
        throw ArgumentError("incomplete Lambda shift must satisfy a >= 0");
    }
    if (!(tol > 0.0)) {
        throw ArgumentError("incomplete Lambda tolerance must be positive");
    }
}

double sin_pi(double x) {
    if (!std::isfinite(x)) {
        throw ArgumentError("sin_pi: non-finite argument");
    }
    const double n = std::nearbyint(x);
    const double r = x - n;
    if (r == 0.0) {
        return 0.0;
    }
    const double v = std::sin(pi * r);
    return std::fmod(n, 2.0) != 0.0 ? -v : v;
}

double sinc(double x) {
    if (!std::isfinite(x)) {
        throw ArgumentError("sinc: non-finite argument");
    }
    if (x == 0.0) {
        return 1.0;
    }
    const double px = pi * x;
    if (std::abs(x) < 1e-4) {
        const double px2 = px * px;
        return 1.0 - px2 / 6.0 + px2 * px2 / 120.0;
    }
    return sin_pi(x) / px;
}

SumEvaluation hurwitz_zeta_scaled(double s, double q, double rel_tol) {
    return hurwitz_core(s, q, std::numeric_limits<double>::infinity(), rel_tol);
}

SumEvaluation hurwitz_zeta(double s, double q, double tol) { return hurwitz_zeta(s, q, tol, tol); }

SumEvaluation hurwitz_zeta(double s, double q, double abs_tol, double rel_tol) {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw ArgumentError("hurwitz_zeta: tolerance must be positive");
    }
    const double q_pow = std::pow(q, s);
    SumEvaluation scaled = hurwitz_core(s, q, abs_tol * q_pow, rel_tol);
    return {scaled.value / q_pow, scaled.tail_bound / q_pow, scaled.terms_used};
}

SumEvaluation incomplete_lambda(const LambdaQuery& query) {
    query.validate();
    const double lead_pow = std::pow(2.0 * query.a + 1.0, query.s);
    SumEvaluation scaled = hurwitz_core(query.s, query.a + 0.5, query.tol * lead_pow, query.tol);
    return {scaled.value / lead_pow, scaled.tail_bound / lead_pow, scaled.terms_used};
}

double incomplete_lambda(double s, double a) { return incomplete_lambda(LambdaQuery{s, a, 1e-15}).value; }

double incomplete_lambda_scaled(double s, double a, double rel_tol) {
    LambdaQuery{s, a, rel_tol}.validate();
    return hurwitz_zeta_scaled(s, a + 0.5, rel_tol).value;
}

double incomplete_lambda_log_derivative(double s, double a) {
    LambdaQuery{s, a, 1.0}.validate();
    // lambda = 2^{-s} zeta(s, q); differentiate a direct head plus the Euler-Maclaurin tail term by term
    const double q = a + 0.5;
    const std::size_t head_terms = static_cast<std::size_t>(std::ceil(s)) + 32;
    double weights = 0.0;
    double weighted_logs = 0.0;
    for (std::size_t n = 0; n < head_terms; ++n) {
        const double v = q + static_cast<double>(n);
        const double w = std::pow(q / v, s);
        weights += w;
        weighted_logs += w * std::log(v);
    }
    const double A = q + static_cast<double>(head_terms);
    const double logA = std::log(A);
    const double base = std::pow(q / A, s);
    weights += A * base / (s - 1.0) + 0.5 * base;
    weighted_logs += A * base * (logA / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0))) + 0.5 * base * logA;
    double rising = s;
    double rising_log_derivative = 1.0 / s;
    double inv_a_pow = 1.0 / A;
    for (std::size_t j = 0; j < 8; ++j) {
        const double c = kBernoulliOverFactorial[j] * base * inv_a_pow * rising;
        weights += c;
        weighted_logs += c * (logA - rising_log_derivative);
        const double k = static_cast<double>(2 * j + 1);
        rising *= (s + k) * (s + k + 1.0);
        rising_log_derivative += 1.0 / (s + k) + 1.0 / (s + k + 1.0);
        inv_a_pow /= A * A;
    }
    return -std::numbers::ln2 - weighted_logs / weights;
}

} // namespace wks
