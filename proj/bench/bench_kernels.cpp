// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "arcstein/chung_feller.hpp"
#include "arcstein/discrete_measure.hpp"
#include "arcstein/walk.hpp"
#include "arcstein/wasserstein.hpp"

using namespace arcstein;

namespace {

WalkConfig walk_config(const benchmark::State& state)
{
    return {.m = state.range(0), .n_paths = state.range(1), .master_seed = 42};
}

void BM_SimulateSerial(benchmark::State& state)
{
    const auto config = walk_config(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::simulate_batch(config));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_SimulateParallel(benchmark::State& state)
{
    const auto config = walk_config(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_batch(config));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

StepCdf float_cdf(std::int64_t m)
{
    return StepCdf::from_measure(law_of_w(pmf_float(m)));
}

void BM_W1Serial(benchmark::State& state)
{
    const auto cdf = float_cdf(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::w1_to_arcsine(cdf));
}

void BM_W1Parallel(benchmark::State& state)
{
    const auto cdf = float_cdf(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(w1_to_arcsine(cdf));
}

void BM_OracleSerial(benchmark::State& state)
{
    const auto cdf = float_cdf(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::w1_quadrature_oracle(cdf, state.range(1)));
}

void BM_OracleParallel(benchmark::State& state)
{
    const auto cdf = float_cdf(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(w1_quadrature_oracle(cdf, state.range(1)));
}

} // namespace

BENCHMARK(BM_SimulateSerial)->Args({16, 100'000})->Args({256, 100'000})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SimulateParallel)->Args({16, 100'000})->Args({256, 100'000})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_W1Serial)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_W1Parallel)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSerial)->Args({64, 1'000'000})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleParallel)->Args({64, 1'000'000})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
