#include <benchmark/benchmark.h>

#include "slrep/permgroup.hpp"
#include "slrep/semilin.hpp"

using namespace slrep;

namespace {

void BM_closure_full_symmetric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<Permutation> gens;
    for (int i = 1; i < n; ++i) gens.push_back(Permutation::adjacent(n, i));
    for (auto _ : state) benchmark::DoNotOptimize(group_closure(gens, n));
}
BENCHMARK(BM_closure_full_symmetric)->Arg(6)->Arg(7)->Arg(8);

void BM_speiser_trivialize(benchmark::State& state) {
    const int N = 2, n = static_cast<int>(state.range(0));
    RfMatrix phi(N, N, n);
    phi.at(0, 0) = RatFunc::constant(Rational(1), n);
    phi.at(0, 1) = RatFunc::variable(1, n);
    phi.at(1, 1) = RatFunc::constant(Rational(1), n);
    CocycleModule m = coboundary_from(phi, n);
    for (auto _ : state) benchmark::DoNotOptimize(speiser_trivialize(m, 5));
}
BENCHMARK(BM_speiser_trivialize)->Arg(3)->Arg(4);

} // namespace
