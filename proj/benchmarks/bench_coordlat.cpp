#include <benchmark/benchmark.h>

#include "coordlat/coord.hpp"
#include "coordlat/regcheck.hpp"

using namespace coordlat;

static void BM_Regularity_Zmod(benchmark::State& state) {
  auto r = make_zmod(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_von_neumann_regular(*r));
}
BENCHMARK(BM_Regularity_Zmod)->Arg(16)->Arg(64)->Arg(256);

static void BM_Regularity_Matrix(benchmark::State& state) {
  auto r = make_matrix_ring(*make_zmod(static_cast<std::size_t>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_von_neumann_regular(*r));
}
BENCHMARK(BM_Regularity_Matrix)->Arg(2)->Arg(3);

static void BM_ValidateRing(benchmark::State& state) {
  auto r = make_matrix_ring(*make_zmod(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(validate_ring(*r, true));
}
BENCHMARK(BM_ValidateRing);

static void BM_Submodules_Free(benchmark::State& state) {
  auto m = make_free_module(make_zmod(2), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_submodules(m));
}
BENCHMARK(BM_Submodules_Free)->DenseRange(2, 5);

static void BM_HomEnumerate(benchmark::State& state) {
  auto m = make_free_module(make_zmod(2), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_enumerate(m, m));
}
BENCHMARK(BM_HomEnumerate)->DenseRange(1, 3);

static void BM_LatticeLaws(benchmark::State& state) {
  const auto l = submodule_lattice(make_free_module(make_zmod(2), static_cast<std::size_t>(state.range(0)))).lattice;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_modular(l));
    benchmark::DoNotOptimize(is_complemented(l));
  }
}
BENCHMARK(BM_LatticeLaws)->DenseRange(2, 4);

static void BM_Coordinatize(benchmark::State& state) {
  auto z2 = make_zmod(2);
  const std::vector<ModulePtr> corpus = {make_free_module(make_zmod(6), 1), make_free_module(z2, 2),
                                         make_free_module(make_matrix_ring(*z2, 2), 1), make_free_module(z2, 3)};
  const auto& m = corpus[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(verify_coordinatization(m));
}
BENCHMARK(BM_Coordinatize)->DenseRange(0, 3);

static void BM_PreimageSummands(benchmark::State& state) {
  auto m = make_free_module(make_zmod(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_preimage_summands(m, m));
}
BENCHMARK(BM_PreimageSummands);
BENCHMARK_MAIN();
