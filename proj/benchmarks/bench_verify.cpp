#include <benchmark/benchmark.h>

#include "qcontig/catalog.hpp"

namespace {

using namespace qcontig;

void BM_VerifyExact(benchmark::State& state, const char* id) {
    const Catalog& cat = Catalog::get();
    Instance inst;
    inst.n = state.range(0);
    ProbabilisticOptions popts;
    for (auto _ : state) {
        auto rep = cat.verify(id, inst, Mode::Exact, popts);
        if (!rep.passed()) state.SkipWithError("verification failed");
    }
}
BENCHMARK_CAPTURE(BM_VerifyExact, bailey, "bailey_4phi3")->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(BM_VerifyExact, sylvester, "sylvester_finite")->Arg(8)->Arg(12);
BENCHMARK_CAPTURE(BM_VerifyExact, kang, "kang_finite")->Arg(6);

void BM_VerifyProbabilistic(benchmark::State& state) {
    const Catalog& cat = Catalog::get();
    Instance inst;
    inst.n = state.range(0);
    ProbabilisticOptions popts;
    popts.trials = 5;
    popts.seed = 42;
    for (auto _ : state) {
        auto rep = cat.verify("gasper_10phi9", inst, Mode::Probabilistic, popts);
        if (!rep.passed()) state.SkipWithError("verification failed");
    }
}
BENCHMARK(BM_VerifyProbabilistic)->Arg(3);

} // namespace
