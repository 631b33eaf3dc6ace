#include <benchmark/benchmark.h>

#include <vector>

#include "cavsq/config.hpp"
#include "cavsq/params.hpp"
#include "cavsq/qle.hpp"

namespace {

using namespace cavsq;

void BM_DeriveCouplings(benchmark::State& state) {
    const RunConfig cfg = preset_config("fig2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            derive_couplings(cfg.params, NuPrimeMode::FixedPoint));
    }
}
BENCHMARK(BM_DeriveCouplings);

void BM_SpectrumPoint(benchmark::State& state) {
    const RunConfig cfg = preset_config("fig2");
    const DerivedCouplings dc =
        derive_couplings(cfg.params, NuPrimeMode::FixedPoint);
    const LinearNoiseModel model = build_model(dc, cfg.params);
    double omega = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            output_spectrum(model, omega, Quadrature::Minus));
        omega += 1.0;  // avoid a fully cached resolvent
    }
}
BENCHMARK(BM_SpectrumPoint);

void BM_SpectrumSweep(benchmark::State& state) {
    const RunConfig cfg = preset_config("fig2");
    const DerivedCouplings dc =
        derive_couplings(cfg.params, NuPrimeMode::FixedPoint);
    const LinearNoiseModel model = build_model(dc, cfg.params);
    const int points = static_cast<int>(state.range(0));
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = (-2.0 + 4.0 * i / (points - 1)) * dc.theta_big;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum_sweep(model, grid));
    }
    state.SetItemsProcessed(state.iterations() * points);
}
BENCHMARK(BM_SpectrumSweep)->Arg(201)->Arg(2001);

}  // namespace

BENCHMARK_MAIN();
