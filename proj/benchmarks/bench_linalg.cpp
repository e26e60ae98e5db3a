#include <benchmark/benchmark.h>

#include "slrep/permmod.hpp"

using namespace slrep;

namespace {

void BM_alpha_rank(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const int n = N + 2;
    for (auto _ : state) benchmark::DoNotOptimize(alpha_map_matrix(N, n));
}
BENCHMARK(BM_alpha_rank)->Arg(1)->Arg(2);

void BM_rank_specialized(benchmark::State& state) {
    auto res = alpha_map_matrix(2, 4);
    for (auto _ : state) {
        SeededSource src(42);
        benchmark::DoNotOptimize(rank_specialized(res.matrix, src));
    }
}
BENCHMARK(BM_rank_specialized);

} // namespace
