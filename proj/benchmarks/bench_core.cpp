#include <benchmark/benchmark.h>

#include "opext/corpus.hpp"
#include "opext/decompose.hpp"
#include "opext/enumerate.hpp"
#include "opext/tiltkit.hpp"

using namespace opext;

static void BM_HomBasis(benchmark::State& state) {
    auto a3 = corpus::algebra("a3");
    auto p1 = projective_module(a3, 0);
    auto sum = direct_sum({p1, p1, radical(p1).rep}).sum;
    for (auto _ : state) benchmark::DoNotOptimize(hom_basis(sum, sum));
}
BENCHMARK(BM_HomBasis);

static void BM_Ext1(benchmark::State& state) {
    auto ab = corpus::algebra("abzero");
    auto s1 = simple_module(ab, 0);
    auto s3 = simple_module(ab, 2);
    for (auto _ : state) benchmark::DoNotOptimize(ext_dim(2, s1, s3));
}
BENCHMARK(BM_Ext1);

static void BM_Tau(benchmark::State& state) {
    auto ab = corpus::algebra("abzero");
    auto s2 = simple_module(ab, 1);
    for (auto _ : state) benchmark::DoNotOptimize(tau(s2));
}
BENCHMARK(BM_Tau);

static void BM_Decompose(benchmark::State& state) {
    auto a3 = corpus::algebra("a3");
    auto sum = direct_sum({projective_module(a3, 0), simple_module(a3, 1),
                           simple_module(a3, 1), injective_module(a3, 0)})
                   .sum;
    for (auto _ : state) benchmark::DoNotOptimize(decompose(sum, 1));
}
BENCHMARK(BM_Decompose);

static void BM_EnumerateStt(benchmark::State& state) {
    auto a3 = corpus::algebra("a3");
    auto indecs = enumerate_indecomposables(a3, 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_stt(a3, indecs, SttMode::Def61, 1));
}
BENCHMARK(BM_EnumerateStt);

BENCHMARK_MAIN();
