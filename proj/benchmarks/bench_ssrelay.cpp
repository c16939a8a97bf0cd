#include <vector>

#include <benchmark/benchmark.h>

#include "ssrelay/analysis.hpp"
#include "ssrelay/montecarlo.hpp"
#include "ssrelay/waterfill.hpp"

using namespace ssrelay;

namespace {

void BM_Uniform(benchmark::State& state) {
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(mc::uniform({7, i++, 1, mc::Role::desired, 0}));
}
BENCHMARK(BM_Uniform);

void BM_RunTrial(benchmark::State& state) {
    SystemConfig cfg;
    cfg.hop_count = static_cast<int>(state.range(0));
    const auto sc = mc::make_scenario(cfg);
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(mc::run_trial(sc, 7, i++));
}
BENCHMARK(BM_RunTrial)->Arg(2)->Arg(8);

void BM_EstimateOutage(benchmark::State& state) {
    SystemConfig cfg;
    const auto sc = mc::make_scenario(cfg);
    for (auto _ : state) benchmark::DoNotOptimize(mc::estimate_outage(sc, 1.0, 100000, 7));
}
BENCHMARK(BM_EstimateOutage)->Unit(benchmark::kMillisecond);

void BM_WaterLevel(benchmark::State& state) {
    const waterfill::HopChannel ch{10.0, 1.0, 1.0};
    double w = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(waterfill::water_level(ch, w));
        w = w > 40.0 ? -10.0 : w + 0.37;
    }
}
BENCHMARK(BM_WaterLevel);

void BM_E2eCdf(benchmark::State& state) {
    const std::vector<double> shapes(static_cast<std::size_t>(state.range(0)), 105.66);
    for (auto _ : state) benchmark::DoNotOptimize(analysis::e2e_cdf(1.0, shapes));
}
BENCHMARK(BM_E2eCdf)->Arg(2)->Arg(8);

void BM_E2eMgf(benchmark::State& state) {
    const std::vector<double> shapes{50.0, 80.0};
    for (auto _ : state) benchmark::DoNotOptimize(analysis::e2e_mgf(0.1, shapes));
}
BENCHMARK(BM_E2eMgf);

void BM_RateK2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(analysis::rate_k2(50.0, 80.0));
}
BENCHMARK(BM_RateK2);

}  // namespace

BENCHMARK_MAIN();
