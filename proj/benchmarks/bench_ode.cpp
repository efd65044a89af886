#include <benchmark/benchmark.h>

#include "landau/madelung.hpp"

using namespace landau;

static void BM_BetaRamp(benchmark::State& state) {
    const auto p = FieldProfile::tanh_ramp(1.0, 2.0, 10.0, 2.0);
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(integrate_beta(p, 50.0, tol));
}
BENCHMARK(BM_BetaRamp)->Arg(8)->Arg(10)->Arg(12);

static void BM_BetaStepCycle(benchmark::State& state) {
    const auto p = FieldProfile::step_sequence(1.0, {{0.0, 2.0}, {1.0, 1.0}});
    for (auto _ : state) benchmark::DoNotOptimize(integrate_beta(p, 50.0, 1e-10));
}
BENCHMARK(BM_BetaStepCycle);
