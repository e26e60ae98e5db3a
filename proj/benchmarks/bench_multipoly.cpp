#include <benchmark/benchmark.h>

#include "slrep/ratfunc.hpp"
#include "slrep/seeded.hpp"

using namespace slrep;

namespace {

MultiPoly dense_poly(int n, int deg, std::uint64_t seed) {
    SeededSource src(seed);
    MultiPoly p(n);
    std::function<void(Monomial&, int, int)> rec = [&](Monomial& m, int pos, int left) {
        if (pos == n) {
            p.add_term(m, make_rational(src.next_int(-9, 9)));
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[pos] = e;
            rec(m, pos + 1, left - e);
        }
        m[pos] = 0;
    };
    Monomial m(n, 0);
    rec(m, 0, deg);
    return p;
}

void BM_poly_multiply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MultiPoly a = dense_poly(n, 3, 1), b = dense_poly(n, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_multiply)->Arg(2)->Arg(3)->Arg(4);

void BM_poly_gcd(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MultiPoly f = dense_poly(n, 2, 3);
    MultiPoly g = dense_poly(n, 2, 4), h = dense_poly(n, 2, 5);
    MultiPoly a = f * g, b = f * h;
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_poly_gcd)->Arg(2)->Arg(3);

void BM_ratfunc_add_normalized(benchmark::State& state) {
    const int n = 3;
    RatFunc f(dense_poly(n, 2, 6), dense_poly(n, 2, 7));
    RatFunc g(dense_poly(n, 2, 8), dense_poly(n, 2, 9));
    for (auto _ : state) benchmark::DoNotOptimize(f + g);
}
BENCHMARK(BM_ratfunc_add_normalized);

} // namespace
