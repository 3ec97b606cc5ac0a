#include <benchmark/benchmark.h>

#include "homcav/homcav.hpp"

namespace {

homcav::SpectralProfile profile() { return homcav::SpectralProfile::degenerate(826.2e-9, 8e-9); }

void BM_RateOneCavity(benchmark::State& state) {
    const double reflectance = state.range(0) / 100.0;
    const homcav::Cavity cavity(0.404838e-3, reflectance);
    const auto spectral = profile();
    double delta = 0.66733e-12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(homcav::rate_one_cavity(cavity, spectral, delta));
        delta += 1e-18;  // defeat value caching across iterations
    }
}
BENCHMARK(BM_RateOneCavity)->Arg(50)->Arg(70)->Arg(90);

void BM_RateTwoCavity(benchmark::State& state) {
    const double reflectance = state.range(0) / 100.0;
    const auto config = homcav::InterferometerConfig::with_both(
        homcav::Cavity(0.404838e-3, reflectance), homcav::Cavity(0.4050447e-3, reflectance),
        profile());
    double delta = 0.66733e-12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(homcav::rate_two_cavity(config, delta));
        delta += 1e-18;
    }
}
BENCHMARK(BM_RateTwoCavity)->Arg(50)->Arg(70)->Arg(90);

void BM_Sweep1001(benchmark::State& state) {
    const double reflectance = state.range(0) / 100.0;
    const auto config = homcav::InterferometerConfig::with_both(
        homcav::Cavity(0.404838e-3, reflectance), homcav::Cavity(0.4050447e-3, reflectance),
        profile());
    for (auto _ : state) {
        benchmark::DoNotOptimize(homcav::sweep(config, -2e-12, 8e-12, 1001));
    }
}
BENCHMARK(BM_Sweep1001)->Arg(70)->Arg(90)->Unit(benchmark::kMillisecond);

void BM_RateSpectral(benchmark::State& state) {
    const auto config = homcav::InterferometerConfig::with_both(
        homcav::Cavity(0.404838e-3, 0.7), homcav::Cavity(0.4050447e-3, 0.7), profile());
    double delta = 0.66733e-12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(homcav::rate_spectral(config, delta));
        delta += 1e-18;
    }
}
BENCHMARK(BM_RateSpectral)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
