// Serial references against the OpenMP kernels: oracle box scan and sweep trials.

#include <benchmark/benchmark.h>

#include "antdoes/experiments.hpp"
#include "antdoes/oracle.hpp"

namespace {

using namespace antdoes;

const Equation& oracle_equation() {
    // 50^3 = 125000 nodes
    static const Equation eq = parse_equation("x1^2 + x2^2 + x3^2 = 2445");
    return eq;
}

void BM_OracleSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_serial(oracle_equation()));
    state.SetItemsProcessed(state.iterations() * 125000);
}
BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond);

void BM_OracleParallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(oracle_equation()));
    state.SetItemsProcessed(state.iterations() * 125000);
}
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

SweepSpec sweep_spec() {
    ColonyConfig base;
    base.num_neighbors = 5;
    base.seed = 10125;
    return SweepSpec{parse_equation("x1^2 + x2^2 = 10125"), SweepAxis::ants, {5, 10, 25}, 20, base};
}

void BM_SweepSerial(benchmark::State& state) {
    const SweepSpec spec = sweep_spec();
    for (auto _ : state)
        benchmark::DoNotOptimize(run_sweep_serial(spec));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
    const SweepSpec spec = sweep_spec();
    for (auto _ : state)
        benchmark::DoNotOptimize(run_sweep(spec));
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
