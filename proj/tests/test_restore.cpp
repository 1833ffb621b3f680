#include "wks/bounds.hpp"
#include "wks/errors.hpp"
#include "wks/restore.hpp"
#include "wks/sincsum.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace wks;

namespace {

constexpr double pi = std::numbers::pi;

BandlimitedSignal from(const char* line) { return make_signal(parse_signal_line(line)); }

double window_kernel_sum(double p, int N, double x) {
    double sum = 0.0;
    for (long n = static_cast<long>(std::ceil(x - N)); n <= static_cast<long>(std::floor(x + N)); ++n) {
        sum += std::pow(std::abs(sinc(x - static_cast<double>(n))), p);
    }
    return sum;
}

} // namespace

TEST_CASE("index set examples") {
    const std::vector<double> x1{0.3};
    const std::vector<int> n2{2};
    const IndexSet a(x1, n2);
    CHECK(a.range(0) == std::pair<long, long>{-1, 2});
    CHECK(a.size() == 4);

    const std::vector<double> half{0.5};
    const std::vector<int> n1{1};
    const IndexSet b(half, n1);
    CHECK(b.range(0) == std::pair<long, long>{0, 1});

    const std::vector<double> origin{0.0, 0.0};
    const std::vector<int> ones{1, 1};
    const IndexSet c = index_set(origin, ones);
    CHECK(c.size() == 9);
    const auto members = c.enumerate();
    REQUIRE(members.size() == 9);
    CHECK(members.front() == std::vector<long>{-1, -1});
    CHECK(members.back() == std::vector<long>{1, 1});
}

TEST_CASE("index set membership is the closed inequality") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> x_dist(-20.0, 20.0);
    for (int i = 0; i < 500; ++i) {
        const std::vector<double> x{x_dist(rng), std::round(x_dist(rng) * 2.0) / 2.0};
        const std::vector<int> Ns{1 + i % 7, 1 + i % 3};
        const IndexSet set(x, Ns);
        for (int j = 0; j < 2; ++j) {
            CHECK((set.axis_size(j) == 2u * Ns[j] || set.axis_size(j) == 2u * Ns[j] + 1));
        }
        for (long u = static_cast<long>(x[0]) - 10; u <= static_cast<long>(x[0]) + 10; ++u) {
            for (long v = static_cast<long>(x[1]) - 5; v <= static_cast<long>(x[1]) + 5; ++v) {
                const std::vector<long> n{u, v};
                const bool inside = std::abs(x[0] - u) <= Ns[0] && std::abs(x[1] - v) <= Ns[1];
                CHECK(set.contains(n) == inside);
            }
        }
    }
    const std::vector<double> x{0.3};
    const std::vector<int> zero{0};
    CHECK_THROWS_AS(IndexSet(x, zero), ArgumentError);
}

TEST_CASE("reconstruction is exact at integers") {
    for (int d : {1, 2}) {
        for (const auto& f : default_corpus(d)) {
            for (long i = -3; i <= 3; ++i) {
                std::vector<double> x(d, static_cast<double>(i));
                x[0] = static_cast<double>(-i);
                const std::vector<int> Ns(d, 2);
                CHECK(truncated_wks(f, x, Ns) == f.evaluate(x));
            }
        }
    }
}

TEST_CASE("shifted sinc at x = 1/2 with N = 20") {
    const auto f = from("shifted_sinc_product d=1 a=0");
    const std::vector<double> x{0.5};
    const std::vector<int> Ns{20};
    CHECK(std::abs(truncated_wks(f, x, Ns) - 2.0 / pi) <= l2_truncation_bound(Ns));
    CHECK(f.evaluate(x) == doctest::Approx(2.0 / pi).epsilon(1e-15));
}

TEST_CASE("sinc^2(x/2) error stays under the L2 bound for N = 8") {
    const auto f = from("sinc_squared_half d=1");
    const std::vector<int> Ns{8};
    const double bound = l2_truncation_bound(Ns) * f.norm_q(2.0);
    for (int i = 0; i < 400; ++i) {
        const std::vector<double> x{-10.0 + 20.0 * i / 400.0};
        CHECK(std::abs(f.evaluate(x) - truncated_wks(f, x, Ns)) <= bound);
    }
}

TEST_CASE("measure_error") {
    const auto f = from("shifted_sinc_product d=1 a=0.25");
    const ProbeSet integers{1, {-3.0, -1.0, 0.0, 2.0, 5.0}, 0};
    const std::vector<int> N4{4};
    CHECK(measure_error(f, integers, N4) == 0.0);

    const ProbeSet probes = make_probes(1, 1000, -2.0, 2.0, 2010);
    const double error = measure_error(f, probes, N4);
    CHECK(error > 0.0);
    CHECK(error <= truncation_constant({{4}, 2.0}) * f.norm_q(2.0));
    CHECK(error <= truncation_constant({{4}, q_threshold(4)}) * f.norm_q(q_threshold(4)));

    double previous = measure_error(f, probes, std::vector<int>{2});
    const double first = previous;
    for (int N : {4, 8, 16}) {
        const double current = measure_error(f, probes, std::vector<int>{N});
        CHECK(current <= 1.1 * previous);
        previous = current;
    }
    CHECK(previous < 0.5 * first);

    const ProbeSet empty{1, {}, 0};
    CHECK_THROWS_AS(measure_error(f, empty, N4), ArgumentError);
    const ProbeSet wrong = make_probes(2, 10, -1.0, 1.0, 1);
    CHECK_THROWS_AS(measure_error(f, wrong, N4), ArgumentError);
    const std::vector<double> x2{0.1, 0.2};
    CHECK_THROWS_AS(truncated_wks(f, x2, std::vector<int>{1, 1}), ArgumentError);
}

TEST_CASE("probe sets") {
    const ProbeSet a = make_probes(2, 1000, -2.0, 2.0, 5);
    const ProbeSet b = make_probes(2, 1000, -2.0, 2.0, 5);
    const ProbeSet c = make_probes(2, 1000, -2.0, 2.0, 6);
    CHECK(a.size() == 1000);
    CHECK(a.coords == b.coords);
    CHECK(a.coords != c.coords);
    for (double v : a.coords) {
        CHECK(v >= -2.0);
        CHECK(v <= 2.0);
    }
    // low discrepancy: every quarter of the first axis gets close to a quarter of the points
    int counts[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++counts[std::min(3, static_cast<int>((a.point(i)[0] + 2.0)))];
    }
    for (int count : counts) {
        CHECK(std::abs(count - 250) <= 3);
    }
    CHECK_THROWS_AS(make_probes(0, 10, 0.0, 1.0, 1), ArgumentError);
    CHECK_THROWS_AS(make_probes(1, 0, 0.0, 1.0, 1), ArgumentError);
    CHECK_THROWS_AS(make_probes(1, 10, 1.0, 1.0, 1), ArgumentError);
}

TEST_CASE("Hoelder split holds pointwise") {
    const std::vector<double> qs{1.1, 1.5, 2.0, 3.0};
    for (int d : {1, 2}) {
        const ProbeSet probes = make_probes(d, 60, -3.0, 3.0, 41);
        for (const auto& f : default_corpus(d)) {
            for (int N : {1, 3}) {
                const std::vector<int> Ns(d, N);
                for (double q : qs) {
                    const double p = q / (q - 1.0);
                    const double samples_total = f.sample_power_sum(q).value;
                    for (std::size_t i = 0; i < probes.size(); ++i) {
                        const auto x = probes.point(i);
                        // prod(w_j + t_j) - prod(w_j), accumulated without cancellation
                        double kernel_tail = 0.0;
                        double kernel_window = 1.0;
                        for (int j = 0; j < d; ++j) {
                            const double w = window_kernel_sum(p, N, x[j]);
                            const double t = h_sum({p, N}, x[j]).value;
                            kernel_tail = kernel_tail * (w + t) + kernel_window * t;
                            kernel_window *= w;
                        }
                        double samples_window = 0.0;
                        for (const auto& n : IndexSet(x, Ns).enumerate()) {
                            samples_window += std::pow(std::abs(f.sample(n)), q);
                        }
                        const double sample_tail = std::max(0.0, samples_total - samples_window);
                        const double bound = std::pow(kernel_tail, 1.0 / p) * std::pow(sample_tail, 1.0 / q);
                        CHECK(std::abs(f.evaluate(x) - truncated_wks(f, x, Ns)) <= bound + 1e-8);
                    }
                }
            }
        }
    }
}

TEST_CASE("cross-term bound in two dimensions") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> x_dist(-4.0, 4.0);
    for (double p : {1.2, 1.5, 2.0, 4.0}) {
        for (int i = 0; i < 100; ++i) {
            const double x0 = x_dist(rng);
            const double x1 = x_dist(rng);
            const int N0 = 1 + i % 4;
            const int N1 = 1 + i % 3;
            const double tail = full_power_sum(p, x0).value * full_power_sum(p, x1).value -
                                window_kernel_sum(p, N0, x0) * window_kernel_sum(p, N1, x1);
            const double bound = cp_constant(p) * (h_sum({p, N0}, x0).value + h_sum({p, N1}, x1).value);
            CHECK(tail <= bound + 1e-12);
        }
    }
}
