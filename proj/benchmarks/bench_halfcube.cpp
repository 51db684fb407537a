#include <benchmark/benchmark.h>

#include "halfcube/characters.hpp"
#include "halfcube/halfcube_complex.hpp"
#include "halfcube/homology.hpp"
#include "halfcube/homology_reps.hpp"

using namespace halfcube;

static void BM_FaceCensus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(face_census(n));
}
BENCHMARK(BM_FaceCensus)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_BuildComplex(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        HalfCubeComplex hc(n);
        benchmark::DoNotOptimize(hc.count(2));
    }
}
BENCHMARK(BM_BuildComplex)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_SubcomplexHomology(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    HalfCubeComplex hc(n);
    const auto cc = hc.subcomplex(3);
    for (auto _ : state) benchmark::DoNotOptimize(homology(cc));
}
BENCHMARK(BM_SubcomplexHomology)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    HalfCubeComplex hc(n);
    const auto& d = hc.boundary(2);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(d));
    state.counters["nonzeros"] = static_cast<double>(d.nonzeros());
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_HopfTraceOverClasses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    HalfCubeComplex hc(n);
    const auto classes = conjugacy_classes(n, GroupType::D);
    for (auto _ : state) {
        std::int64_t total = 0;
        for (const auto& c : classes) total += hopf_homology_trace(hc, 3, c.representative);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_HopfTraceOverClasses)->DenseRange(4, 6)->Unit(benchmark::kMicrosecond);

static void BM_ChiDValues(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto classes = conjugacy_classes(n, GroupType::D);
    const auto chi = chi_d_decomposition(n, 3);
    for (auto _ : state) {
        std::int64_t total = 0;
        for (const auto& c : classes) total += value_d(chi, c.type);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ChiDValues)->DenseRange(4, 6)->Unit(benchmark::kMicrosecond);

static void BM_LittlewoodRichardson(benchmark::State& state) {
    const Partition mu({4, 3, 2, 1}), nu({3, 2, 1});
    const Partition lambda({6, 5, 3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(mu, nu, lambda));
}
BENCHMARK(BM_LittlewoodRichardson);

BENCHMARK_MAIN();
