#include <benchmark/benchmark.h>

#include "landau/basis.hpp"

using namespace landau;

static void BM_HermiteGaussTable(benchmark::State& state) {
    const auto n_max = static_cast<unsigned>(state.range(0));
    const Grid g = default_grid(n_max, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(hermite_gauss_table(n_max, 1.0, g));
    state.SetItemsProcessed(state.iterations() * (n_max + 1) * g.count());
}
BENCHMARK(BM_HermiteGaussTable)->Arg(12)->Arg(40)->Arg(150);
