#include <benchmark/benchmark.h>

#include "qcontig/qseries.hpp"

namespace {

using namespace qcontig;

void BM_PochhammerExpand(benchmark::State& state) {
    Workspace ws{"q", "a"};
    auto q = RationalFunction::var(ws.lookup("q"));
    auto a = RationalFunction::var(ws.lookup("a"));
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(poch(a, q, n));
    }
}
BENCHMARK(BM_PochhammerExpand)->Arg(8)->Arg(16)->Arg(32);

void BM_PolynomialGcd(benchmark::State& state) {
    Workspace ws{"q", "x"};
    auto q = RationalFunction::var(ws.lookup("q"));
    auto x = RationalFunction::var(ws.lookup("x"));
    auto one = RationalFunction::from_rational(Rational(1));
    const long n = state.range(0);
    Polynomial g = (one - x * q.pow(3)).num();
    Polynomial a = (poch(x, q, n)).num() * g;
    Polynomial b = (poch(x * q, q, n)).num() * g;
    for (auto _ : state) {
        benchmark::DoNotOptimize(Polynomial::gcd(a, b));
    }
}
BENCHMARK(BM_PolynomialGcd)->Arg(6)->Arg(12);

} // namespace

BENCHMARK_MAIN();
