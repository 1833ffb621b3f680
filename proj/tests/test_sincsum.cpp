#include "wks/errors.hpp"
#include "wks/sincsum.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace wks;

namespace {

constexpr double pi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double window_sum(double p, int N, double x) {
    double sum = 0.0;
    for (long n = static_cast<long>(std::ceil(x - N)); n <= static_cast<long>(std::floor(x + N)); ++n) {
        sum += std::pow(std::abs(sinc(x - static_cast<double>(n))), p);
    }
    return sum;
}

} // namespace

TEST_CASE("folding onto [1/2, 1]") {
    CHECK(fold_to_half_period(0.3) == doctest::Approx(0.7));
    CHECK(fold_to_half_period(2.6) == doctest::Approx(0.6));
    CHECK(fold_to_half_period(-0.2) == doctest::Approx(0.8));
    CHECK(fold_to_half_period(3.0) == 1.0);
    CHECK(fold_to_half_period(0.5) == 0.5);
}

TEST_CASE("full power sum examples") {
    CHECK(full_power_sum(2.0, 0.37).value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(full_power_sum(5.0, 0.0).value == 1.0);
    const double v = full_power_sum(1.5, 0.5).value;
    CHECK(v > 1.0);
    CHECK(v < 2.524);
    CHECK(rel(v, 1.7156094074460445439) < 1e-12);
    CHECK(rel(full_power_sum(3.0, 0.3).value, 0.69767859554544926328) < 1e-12);
    CHECK(rel(full_power_sum(1.5, 0.25).value, 1.4426498006969282198) < 1e-12);
}

TEST_CASE("h_sum against brute-force oracle values") {
    CHECK(rel(h_sum({2.0, 2}, 0.5).value, 0.099367256512553142721) < 1e-12);
    CHECK(rel(h_sum({3.0, 1}, 0.7).value, 0.015391502791534608213) < 1e-12);
    CHECK(rel(h_sum({1.5, 4}, 0.62).value, 0.32149981178894657807) < 1e-11);
    CHECK(rel(h_sum({27.0, 2}, 0.6).value, 5.891276419262868002e-25) < 1e-12);
    CHECK(h_sum({3.0, 2}, 1.0).value == 0.0);
    CHECK(h_sum({3.0, 2}, -4.0).value == 0.0);
}

TEST_CASE("h_sum at 1/2 equals 2 (2/pi)^p lambda(p; N)") {
    for (double p : {1.5, 2.0, 3.7, 10.0, 21.0, 60.0}) {
        for (int N = 1; N <= 6; ++N) {
            const double expected = 2.0 * std::pow(2.0 / pi, p) * incomplete_lambda(p, N);
            CHECK(rel(h_sum({p, N}, 0.5).value, expected) < 1e-12);
        }
    }
    CHECK(rel(h_sum({2.0, 2}, 0.5).value, 1.0 - 8.0 / (pi * pi) * (1.0 + 1.0 / 9.0)) < 1e-12);
}

TEST_CASE("decomposition: full sum = window + tail") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> p_dist(1.2, 12.0), x_dist(-5.0, 5.0);
    std::uniform_int_distribution<int> n_dist(1, 12);
    for (int i = 0; i < 50; ++i) {
        const double p = p_dist(rng);
        const int N = n_dist(rng);
        const double x = x_dist(rng);
        CHECK(std::abs(full_power_sum(p, x).value - window_sum(p, N, x) - h_sum({p, N}, x).value) < 1e-10);
    }
}

TEST_CASE("periodicity and symmetry") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> p_dist(1.2, 30.0), x_dist(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const PowerSumParams params{p_dist(rng), 1 + i % 5};
        const double x = x_dist(rng);
        const double h = h_sum(params, x).value;
        CHECK(std::abs(h - h_sum(params, x + 1.0).value) <= 1e-12 * std::max(1.0, h));
        CHECK(std::abs(h - h_sum(params, 1.0 - x).value) <= 1e-12 * std::max(1.0, h));
    }
}

TEST_CASE("term-sum consistency") {
    const PowerSumParams params{2.5, 2};
    const double x = 0.71;
    double partial = 0.0;
    for (long k = 3; k <= 20000; ++k) {
        partial += psi_term(params, k, x);
    }
    const SumEvaluation series = psi_series(params, x);
    // remainder of the explicit sum is below 2 sin^p int_{20000}^inf (t - 1)^{-p} dt
    const double remainder = 2.0 * std::pow(19999.0, -1.5) / 1.5;
    CHECK(series.value - partial >= -series.tail_bound);
    CHECK(series.value - partial <= remainder + series.tail_bound);
    CHECK(rel(h_sum(params, x).value, std::pow(pi, -2.5) * series.value) < 1e-14);
}

TEST_CASE("psi_term examples") {
    CHECK(psi_term({2.0, 1}, 2, 1.0) == 0.0);
    CHECK(psi_term({2.0, 1}, 2, 0.5) == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
    const double psi = psi_term({4.0, 1}, 3, 0.75);
    CHECK(rel(psi, 0.014125896691992297574) < 1e-14);
    // pi^{-p} psi_k is the pair of sinc^p terms at n = k and n = 1 - k
    CHECK(rel(std::pow(pi, -4.0) * psi, 0.00014501620477149707898) < 1e-13);
    CHECK_THROWS_AS(psi_term({2.0, 2}, 2, 0.7), DomainError);
    CHECK_THROWS_AS(psi_term({2.0, 2}, 3, 0.3), DomainError);
}

TEST_CASE("psi_term_derivative examples and finite differences") {
    CHECK(std::abs(psi_term_derivative({2.0, 1}, 2, 0.5 + 1e-12)) < 1e-9);
    CHECK(psi_term_derivative({2.0, 1}, 2, 0.9) < 0.0);
    const double h = 1e-6;
    const double fd30 = (psi_term({30.0, 1}, 2, 0.55 + h) - psi_term({30.0, 1}, 2, 0.55 - h)) / (2 * h);
    const double d30 = psi_term_derivative({30.0, 1}, 2, 0.55);
    CHECK((fd30 > 0) == (d30 > 0));

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> p_dist(1.2, 40.0), x_dist(0.52, 0.98);
    for (int i = 0; i < 1000; ++i) {
        const PowerSumParams params{p_dist(rng), 1 + i % 4};
        const long k = params.N + 1 + i % 30;
        const double x = x_dist(rng);
        const double step = 1e-5;
        const double fd =
            (-psi_term(params, k, x + 2 * step) + 8 * psi_term(params, k, x + step) -
             8 * psi_term(params, k, x - step) + psi_term(params, k, x - 2 * step)) /
            (12 * step);
        const double exact = psi_term_derivative(params, k, x);
        CHECK(std::abs(fd - exact) <= 1e-5 * std::abs(exact) + 1e-300);
    }
}

TEST_CASE("negative psi derivative propagates to the next term") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> p_dist(1.1, 60.0), x_dist(0.5, 1.0);
    int propagated = 0;
    for (int i = 0; i < 1000; ++i) {
        const int N = 1 + i % 5;
        const PowerSumParams params{p_dist(rng), N};
        double x = x_dist(rng);
        if (x <= 0.5) {
            x = 0.75;
        }
        for (long k = N + 1; k <= N + 50; ++k) {
            if (psi_term_derivative(params, k, x) < 0.0) {
                CHECK(psi_term_derivative(params, k + 1, x) < 0.0);
                ++propagated;
            }
        }
    }
    CHECK(propagated > 1000);
}

TEST_CASE("sine ratio inequality on [0, 1/2]") {
    for (int i = 0; i <= 10000; ++i) {
        const double z = 0.5 * i / 10000.0;
        const double lhs = z == 0.0 ? 1.0 : std::sin(2 * pi * z) / (2 * pi * z);
        CHECK(lhs <= (1 - z * z) / (1 + z * z) + 1e-15);
    }
}

TEST_CASE("closed-form second derivative at 1/2") {
    // pi^p times five-point finite differences of the true tail sum
    CHECK(rel(h_second_derivative_at_half(2.0, 1), -34.086329582570262099) < 1e-12);
    CHECK(rel(h_second_derivative_at_half(30.0, 1), 0.0012228893984327851325) < 1e-11);
    CHECK(rel(h_second_derivative_at_half(10.0, 2), -0.017721743412921656542) < 1e-11);
    CHECK(h_second_derivative_at_half(2.0, 1) < 0.0);
    CHECK(h_second_derivative_at_half(30.0, 1) > 0.0);
    CHECK_THROWS_AS(h_second_derivative_at_half(1.0, 1), DomainError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(h_sum({1.0, 1}, 0.3), DivergenceError);
    CHECK_THROWS_AS(h_sum({2.0, 0}, 0.3), DomainError);
    CHECK_THROWS_AS(full_power_sum(0.9, 0.3), DivergenceError);
    CHECK_THROWS_AS(h_sum({2.0, 1, -1.0}, 0.3), ArgumentError);
}
