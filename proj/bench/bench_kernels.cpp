// OpenMP kernels against their serial references. Arguments: {d, n, threads}; threads is
// ignored by the ref variants. Run with --benchmark_filter to pick a kernel.
#include <benchmark/benchmark.h>

#include "gnsym/families.hpp"
#include "gnsym/parallel.hpp"
#include "gnsym/spectral.hpp"

using namespace gnsym;

namespace {

GridFunction input(const benchmark::State& st) {
  const Grid g = Grid::make(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), 16.0);
  return random_band_limited(g, 1, 0.0, 0.5 * g.xi_extent());
}

void BM_lp_norm_par(benchmark::State& st) {
  const GridFunction u = input(st);
  par::set_threads(static_cast<int>(st.range(2)));
  for (auto _ : st) benchmark::DoNotOptimize(lp_norm(u, 1.0 / 3.0));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(u.samples.size()));
}

void BM_lp_norm_ref(benchmark::State& st) {
  const GridFunction u = input(st);
  for (auto _ : st) benchmark::DoNotOptimize(ref::lp_norm(u, 1.0 / 3.0));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(u.samples.size()));
}

void BM_multiplier_par(benchmark::State& st) {
  const GridFunction u = input(st);
  const SymbolSpec m = SymbolSpec::bessel_power(1.5);
  par::set_threads(static_cast<int>(st.range(2)));
  for (auto _ : st) benchmark::DoNotOptimize(apply_multiplier(u, m));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(u.samples.size()));
}

void BM_multiplier_ref(benchmark::State& st) {
  const GridFunction u = input(st);
  const SymbolSpec m = SymbolSpec::bessel_power(1.5);
  for (auto _ : st) benchmark::DoNotOptimize(ref::apply_multiplier(u, m));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(u.samples.size()));
}

void shapes(benchmark::internal::Benchmark* b) {
  for (int threads : {1, 2, 4}) {
    b->Args({1, 1 << 16, threads});
    b->Args({2, 512, threads});
    b->Args({3, 64, threads});
  }
  b->ArgNames({"d", "n", "threads"})->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_lp_norm_par)->Apply(shapes);
BENCHMARK(BM_lp_norm_ref)->Apply(shapes);
BENCHMARK(BM_multiplier_par)->Apply(shapes);
BENCHMARK(BM_multiplier_ref)->Apply(shapes);

BENCHMARK_MAIN();
