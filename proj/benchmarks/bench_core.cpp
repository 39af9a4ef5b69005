#include <benchmark/benchmark.h>

#include "sdde/delay.hpp"
#include "sdde/experiments.hpp"
#include "sdde/limit.hpp"
#include "sdde/model.hpp"
#include "sdde/rng.hpp"
#include "sdde/spectrum.hpp"

using namespace sdde;

namespace {

ModelSpec bench_model() {
    return bounded2d(Mat(2, 2, {0.25, 0.05, -0.05, 0.2}), Mat(2, 2, {0.21, -0.14, 0.105, 0.175}));
}

void BM_PhiloxGaussian(benchmark::State& state) {
    Philox4x32 rng = rng_stream(1, StreamPurpose::generic, 0);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next_gaussian());
}
BENCHMARK(BM_PhiloxGaussian);

void BM_BuildWiener(benchmark::State& state) {
    for (auto _ : state) {
        const WienerGrid grid = build_wiener(7, 0.0, 1.0, 1e-4, 2);
        benchmark::DoNotOptimize(grid.inc.data());
    }
}
BENCHMARK(BM_BuildWiener);

void BM_OuStepShared(benchmark::State& state) {
    std::vector<double> y = {0.1, -0.2};
    const std::vector<double> taus = {0.05, 0.05};
    const std::vector<double> dW = {1e-3, -2e-3};
    for (auto _ : state) {
        ou_step_shared_inplace(y, 1e-3, taus, dW);
        benchmark::DoNotOptimize(y.data());
    }
}
BENCHMARK(BM_OuStepShared);

void BM_IntegrateSdde(benchmark::State& state) {
    const ModelSpec model = bench_model();
    const DelaySchedule sched{{1.0, 1.0}, {1.0, 1.0}, 0.05};
    const double h = 5e-4;
    const WienerGrid grid = build_wiener(3, -0.2, 1.0, h, 2);
    const PastCondition past = PastCondition::constant({0.0, 0.0}, -0.2);
    for (auto _ : state) {
        const SddeResult result = integrate_sdde(model, sched, past, grid, h);
        benchmark::DoNotOptimize(result.x.data.data());
    }
}
BENCHMARK(BM_IntegrateSdde);

void BM_IntegrateItoSde(benchmark::State& state) {
    const ModelSpec model = bench_model();
    const DelaySchedule sched{{1.0, 1.0}, {1.0, 1.0}, 0.05};
    const double h = 5e-4;
    const WienerGrid grid = build_wiener(3, 0.0, 1.0, h, 2);
    for (auto _ : state) {
        const Path path = integrate_ito_sde(model, sched, DriftKind::exact, {0.0, 0.0}, grid, h);
        benchmark::DoNotOptimize(path.data.data());
    }
}
BENCHMARK(BM_IntegrateItoSde);

void BM_CoupledSupError(benchmark::State& state) {
    const ModelSpec model = bench_model();
    const DelaySchedule sched{{1.0, 1.0}, {0.2, 0.2}, 0.05};
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(coupled_sup_error(model, sched, seed++, 5e-4, 1.0));
}
BENCHMARK(BM_CoupledSupError);

void BM_Periodogram(benchmark::State& state) {
    const Path series = ou_exact_chain(OUParams(5.0, 1.0), 0.1, 206848, 11);
    for (auto _ : state) {
        const Spectrum spec = spectrum_periodogram(series, 0.1, 0, 4096);
        benchmark::DoNotOptimize(spec.power.data());
    }
}
BENCHMARK(BM_Periodogram);

}  // namespace

BENCHMARK_MAIN();
