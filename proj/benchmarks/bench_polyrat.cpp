#include <random>

#include "benchmark/benchmark.h"
#include "netcode/polyrat.hpp"

using namespace netcode;

namespace {

RatMatrix random_matrix(const Field* f, size_t n, int deg, uint64_t seed) {
    std::mt19937_64 rng(seed);
    RatMatrix m(f, n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            std::vector<uint32_t> cs(size_t(deg) + 1);
            for (auto& x : cs) x = uint32_t(rng() % f->size());
            m.at(r, c) = Rat(Poly(f, std::move(cs)));
        }
    return m;
}

}  // namespace

static void BM_PolyMul(benchmark::State& state) {
    auto f = Field::make(2, 1);
    std::mt19937_64 rng(1);
    std::vector<uint32_t> a(size_t(state.range(0))), b(size_t(state.range(0)));
    for (auto& x : a) x = uint32_t(rng() % 2);
    for (auto& x : b) x = uint32_t(rng() % 2);
    Poly pa(f.get(), a), pb(f.get(), b);
    for (auto _ : state) {
        Poly r = pa * pb;
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32);

static void BM_BareissDet(benchmark::State& state) {
    auto f = Field::make(3, 1);
    RatMatrix m = random_matrix(f.get(), size_t(state.range(0)), 3, 7);
    for (auto _ : state) {
        Rat d = mat_det(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_BareissDet)->Arg(3)->Arg(5);

static void BM_Rank(benchmark::State& state) {
    auto f = Field::make(2, 1);
    RatMatrix m = random_matrix(f.get(), size_t(state.range(0)), 4, 11);
    for (auto _ : state) {
        size_t r = mat_rank(m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Rank)->Arg(4)->Arg(6);
