#include <benchmark/benchmark.h>

#include "mescorr/crosskerr.hpp"

namespace {

void BM_KerrFidelity(benchmark::State& state) {
    const mescorr::complex alpha{static_cast<double>(state.range(0)), 0.0};
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(mescorr::kerr_mes_fidelity(alpha, d));
}
BENCHMARK(BM_KerrFidelity)->Args({1, 2})->Args({4, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

} // namespace
