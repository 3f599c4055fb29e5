#include "benchmark/benchmark.h"
#include "netcode/field.hpp"

using namespace netcode;

static void BM_FieldMul(benchmark::State& state) {
    auto f = Field::make(2, uint32_t(state.range(0)));
    uint32_t a = f->size() / 2 + 1, b = f->size() / 3 + 1;
    for (auto _ : state) {
        a = f->mul(a, b) | 1;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(3)->Arg(8)->Arg(16);

static void BM_FieldInv(benchmark::State& state) {
    auto f = Field::make(3, 4);  // F_81
    uint32_t a = 1;
    for (auto _ : state) {
        a = f->inv(a % (f->size() - 1) + 1);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldInv);

static void BM_MakeField(benchmark::State& state) {
    // interned after the first call; measures the cache path
    for (auto _ : state) {
        auto f = Field::make(2, 8);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_MakeField);
