#include <benchmark/benchmark.h>

#include "mzv/mzv.hpp"

namespace {

const mzv::AbcParams kClassical(3, 1, 2);

void BM_StarSumDirect(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mzv::s_star_direct(1, 1, m, kClassical));
    }
}
BENCHMARK(BM_StarSumDirect)->Arg(50)->Arg(200)->Arg(800);

void BM_StarRecursion(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mzv::recursion_FG_star(m, kClassical, {6, 6}));
    }
}
BENCHMARK(BM_StarRecursion)->Arg(10)->Arg(40);

void BM_HarmonicProduct(benchmark::State& state) {
    const mzv::HPoly u = mzv::build_frs(1, 1, kClassical);
    const mzv::HPoly v = mzv::build_frt(1, 1, kClassical);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mzv::harmonic_mul(u, v));
    }
}
BENCHMARK(BM_HarmonicProduct);

}  // namespace

BENCHMARK_MAIN();
