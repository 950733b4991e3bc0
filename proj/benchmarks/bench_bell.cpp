#include <benchmark/benchmark.h>

#include "mescorr/bell_oracle.hpp"

namespace {

void BM_BellValue(benchmark::State& state) {
    const auto q = mescorr::QutritState::uniform();
    const auto m = mescorr::MeasurementSettings::reference();
    for (auto _ : state) benchmark::DoNotOptimize(mescorr::bell_value(q, m));
}
BENCHMARK(BM_BellValue);

void BM_MaximizeBell(benchmark::State& state) {
    const auto q = mescorr::QutritState::normalized({0.8, 0.5, 0.33});
    mescorr::OracleOptions options;
    options.restarts = static_cast<int>(state.range(0));
    options.family = state.range(1) == 0 ? mescorr::MeasurementFamily::fourier_phase
                                         : mescorr::MeasurementFamily::general_unitary;
    for (auto _ : state) benchmark::DoNotOptimize(mescorr::maximize_bell(q, options));
}
BENCHMARK(BM_MaximizeBell)->Args({1, 0})->Args({32, 0})->Args({1, 1})->Unit(benchmark::kMillisecond);

} // namespace
