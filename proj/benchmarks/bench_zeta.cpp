#include <benchmark/benchmark.h>

#include <cmath>

#include "sinr/gain_matrix.hpp"
#include "sinr/gains.hpp"
#include "sinr/metricity.hpp"

namespace {

// 60 nodes on a semicircular arc, the largest deployment the CLI generates.
sinr::GainMatrix arc_matrix(double sigma) {
    sinr::NodeLayout layout;
    const double pi = std::acos(-1.0);
    const double radius = 40.0 / pi;
    for (std::size_t i = 0; i < 60; ++i) {
        const double theta = pi * static_cast<double>(i) / 59.0;
        layout.positions.push_back({radius * std::cos(theta), radius * std::sin(theta), 0.0});
    }
    return sinr::lognormal_gain(layout, 2.18, sigma, 1);
}

void bm_zeta_serial(benchmark::State& state) {
    const sinr::GainMatrix m = arc_matrix(static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sinr::zeta_pairs_serial(m));
}

void bm_zeta_parallel(benchmark::State& state) {
    const sinr::GainMatrix m = arc_matrix(static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sinr::zeta_pairs(m));
}

} // namespace

BENCHMARK(bm_zeta_serial)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_zeta_parallel)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
