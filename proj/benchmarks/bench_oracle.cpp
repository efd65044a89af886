#include <benchmark/benchmark.h>

#include "landau/basis.hpp"
#include "landau/oracle.hpp"

using namespace landau;

// 100 Crank-Nicolson steps per iteration.
static void BM_CrankNicolson(benchmark::State& state) {
    const Grid g(8.0, static_cast<std::size_t>(state.range(0)));
    std::vector<cplx> psi;
    for (double v : LandauMode(0, 1.0).sample(g)) psi.emplace_back(v);
    const WaveField init(g, psi);
    const auto p = FieldProfile::tanh_ramp(1.0, 1.5, 0.05, 0.02);
    for (auto _ : state) benchmark::DoNotOptimize(propagate(init, p, 0.1, 1e-3));
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_CrankNicolson)->Arg(2049)->Arg(8193);
