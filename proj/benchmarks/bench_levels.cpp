#include <benchmark/benchmark.h>

#include "landau/levels.hpp"

using namespace landau;

static void BM_LevelOdes(benchmark::State& state) {
    const auto n_max = static_cast<unsigned>(state.range(0));
    const auto p = FieldProfile::tanh_ramp(1.0, 1.5, 15.0, 3.0);
    const std::vector<double> ts{10.0, 20.0, 30.0};
    for (auto _ : state) benchmark::DoNotOptimize(integrate_level_odes(p, 1, n_max, 30.0, 1e-10, ts));
}
BENCHMARK(BM_LevelOdes)->Arg(41)->Arg(81);
