#include "wks/extrema.hpp"
#include "wks/kernels.hpp"
#include "wks/restore.hpp"
#include "wks/signals.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

wks::Execution policy(const benchmark::State& state) {
    return state.range(0) == 0 ? wks::Execution::serial : wks::Execution::parallel;
}

void BM_measure_error(benchmark::State& state) {
    const auto corpus = wks::default_corpus(2);
    const auto probes = wks::make_probes(2, 1000, -2.0, 2.0, 2010);
    const std::vector<int> Ns{8, 8};
    for (auto _ : state) {
        benchmark::DoNotOptimize(wks::measure_error(corpus[1], probes, Ns, policy(state)));
    }
}

void BM_tabulate_h_sum(benchmark::State& state) {
    std::vector<double> xs(1200);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xs[i] = 3.0 * static_cast<double>(i) / 1199.0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(wks::tabulate_h_sum(27.0, 2, xs, 1e-12, policy(state)));
    }
}

void BM_scan_max(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(wks::scan_max(20.0, 3, 4096, policy(state)));
    }
}

} // namespace

BENCHMARK(BM_measure_error)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tabulate_h_sum)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_max)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
