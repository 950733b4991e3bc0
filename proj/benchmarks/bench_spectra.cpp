#include <benchmark/benchmark.h>

#include "mescorr/metrics.hpp"
#include "mescorr/states.hpp"

namespace {

void BM_GmesSpectrum(benchmark::State& state) {
    const double b = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mescorr::gmes_spectrum(b));
}
BENCHMARK(BM_GmesSpectrum)->Arg(1)->Arg(15)->Arg(100);

void BM_TmsvSpectrum(benchmark::State& state) {
    const double r = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mescorr::tmsv_spectrum(r));
}
BENCHMARK(BM_TmsvSpectrum)->Arg(1)->Arg(3)->Arg(5);

void BM_SolveB(benchmark::State& state) {
    const double nbar = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mescorr::solve_b_for_nbar(nbar));
}
BENCHMARK(BM_SolveB)->Arg(1)->Arg(50);

void BM_MesOverlap200(benchmark::State& state) {
    for (auto _ : state) {
        const auto lead = mescorr::gmes_leading(13.8, 200);
        benchmark::DoNotOptimize(mescorr::mes_overlap(200, lead));
    }
}
BENCHMARK(BM_MesOverlap200);

} // namespace
