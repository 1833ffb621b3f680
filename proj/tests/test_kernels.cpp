#include "wks/extrema.hpp"
#include "wks/harness.hpp"
#include "wks/kernels.hpp"
#include "wks/restore.hpp"
#include "wks/sincsum.hpp"

#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

using namespace wks;

TEST_CASE("for_each_index visits every index once under both policies") {
    for (Execution exec : {Execution::serial, Execution::parallel}) {
        std::vector<std::atomic<int>> hits(1000);
        for_each_index(hits.size(), exec, [&](std::size_t i) { ++hits[i]; });
        for (const auto& h : hits) {
            CHECK(h.load() == 1);
        }
    }
}

TEST_CASE("exceptions propagate out of parallel loops") {
    CHECK_THROWS_AS(for_each_index(100, Execution::parallel,
                                   [](std::size_t i) {
                                       if (i == 37) {
                                           throw std::runtime_error("boom");
                                       }
                                   }),
                    std::runtime_error);
}

TEST_CASE("argmax resolves ties to the smallest index") {
    const std::vector<double> v{1.0, 3.0, 2.0, 3.0};
    CHECK(argmax_first(v) == 1);
}

TEST_CASE("h_sum tabulation: serial and parallel agree bit for bit") {
    std::vector<double> xs(777);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xs[i] = -1.0 + 4.0 * static_cast<double>(i) / 776.0;
    }
    const auto serial = tabulate_h_sum(2.7, 3, xs, 1e-12, Execution::serial);
    const auto parallel = tabulate_h_sum(2.7, 3, xs, 1e-12, Execution::parallel);
    CHECK(serial == parallel);
    for (std::size_t i = 0; i < xs.size(); i += 50) {
        CHECK(serial[i] == h_sum({2.7, 3, 1e-12}, xs[i]).value);
    }
}

TEST_CASE("measure_error: serial and parallel agree bit for bit") {
    const auto probes = make_probes(2, 500, -2.0, 2.0, 3);
    const std::vector<int> Ns{3, 5};
    for (const auto& f : default_corpus(2)) {
        CHECK(measure_error(f, probes, Ns, Execution::serial) == measure_error(f, probes, Ns, Execution::parallel));
    }
}

TEST_CASE("campaign is deterministic and policy independent") {
    CampaignConfig config = default_campaign(1, 4);
    config.Ns_list = {{1}, {3}};
    config.q_list = {1.5, 2.0};
    config.probe_count = 200;
    config.exec = Execution::serial;
    const CampaignReport a = validate_bounds_campaign(config);
    config.exec = Execution::parallel;
    const CampaignReport b = validate_bounds_campaign(config);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].signal == b.cells[i].signal);
        CHECK(a.cells[i].error == b.cells[i].error);
        CHECK(a.cells[i].bound == b.cells[i].bound);
    }
}

TEST_CASE("worker count") {
    const int before = worker_count();
    set_worker_count(2);
    CHECK(worker_count() == 2);
    set_worker_count(before);
}
