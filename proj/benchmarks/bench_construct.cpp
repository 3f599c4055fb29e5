#include "benchmark/benchmark.h"
#include "netcode/delaycode.hpp"
#include "netcode/lif.hpp"
#include "netcode/netgen.hpp"
#include "netcode/oracle.hpp"

using namespace netcode;

static void BM_LifCombination(benchmark::State& state) {
    Network n = netgen::combination(5, 3);
    auto f = Field::make(5, 1);
    for (auto _ : state) {
        auto res = lif_construct(n, f, Mode::unit_delay);
        benchmark::DoNotOptimize(res.code);
    }
}
BENCHMARK(BM_LifCombination);

static void BM_NonuniformFig2(benchmark::State& state) {
    Network n = netgen::fig2_cascade();
    for (auto _ : state) {
        auto s = nonuniform_construct(n, Mode::unit_delay);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_NonuniformFig2);

static void BM_OracleButterfly(benchmark::State& state) {
    Network n = netgen::butterfly();
    auto f = Field::make(2, 1);
    for (auto _ : state) {
        auto cert = oracle::exhaustive_search(n, f, Mode::instantaneous);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_OracleButterfly);

static void BM_Verify(benchmark::State& state) {
    Network n = netgen::fig2_cascade();
    auto code = lif_construct(n, Field::make(3, 1), Mode::unit_delay).code;
    for (auto _ : state) {
        auto v = check_feasibility(n, code);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Verify);
