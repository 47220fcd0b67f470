#include <benchmark/benchmark.h>

#include "schurext/exactlin.hpp"
#include "schurext/resolutions.hpp"
#include "schurext/series.hpp"
#include "schurext/speccomplex.hpp"
#include "schurext/twistedkoszul.hpp"

using namespace schurext;

static void BM_WeylComplexHomology(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  spec::FilteredFamily fam;
  fam.functor = poly::weyl(comb::hook(d - 2, 2));
  fam.a = 1;
  for (auto _ : state) {
    const auto c = spec::build_complex(fam);
    benchmark::DoNotOptimize(lin::homology_table(c));
  }
}
BENCHMARK(BM_WeylComplexHomology)->DenseRange(4, 7);

static void BM_ExtSchurQuery(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const comb::Partition lam = comb::hook(d - 3, 3), mu(std::vector<int>(d, 1));
  for (auto _ : state) benchmark::DoNotOptimize(spec::ext_schur_query(lam, mu, lin::Ring::prime_field(2)));
}
BENCHMARK(BM_ExtSchurQuery)->DenseRange(4, 8);

static void BM_ESeries(benchmark::State& state) {
  const auto method = state.range(1) ? series::Method::recursive : series::Method::closed;
  for (auto _ : state) benchmark::DoNotOptimize(series::e_series(state.range(0), 2, 32, 64, method));
}
BENCHMARK(BM_ESeries)->ArgsProduct({{3, 17, 40}, {0, 1}});

static void BM_PhiBChainMap(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(koszul::phiB_chain_map(d, 1, 2));
}
BENCHMARK(BM_PhiBChainMap)->DenseRange(4, 6);

static void BM_ResolutionShape(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const comb::Partition mu(std::vector<int>(d / 2, 2));
  for (auto _ : state) benchmark::DoNotOptimize(res::weyl_resolution_shape(mu));
}
BENCHMARK(BM_ResolutionShape)->DenseRange(4, 12, 2);

static void BM_SmithForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  lin::IntegerMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, static_cast<long long>((r * 7 + c * 13) % 11) - 5);
  for (auto _ : state) benchmark::DoNotOptimize(lin::smith_normal_form(m));
}
BENCHMARK(BM_SmithForm)->RangeMultiplier(2)->Range(8, 64);

BENCHMARK_MAIN();
