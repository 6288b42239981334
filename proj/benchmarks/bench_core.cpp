#include <benchmark/benchmark.h>

#include "bsp/closure.hpp"
#include "bsp/enumeration.hpp"
#include "bsp/examples.hpp"
#include "bsp/polytope.hpp"
#include "bsp/product_matrix.hpp"

using namespace bsp;

static void BM_Closure(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto b = construct_example(ExampleKind::example3, d).b;
  for (auto _ : state) benchmark::DoNotOptimize(closure(b));
}
BENCHMARK(BM_Closure)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_CanonicalKey(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto kind = state.range(1) == 3 ? ExampleKind::example3 : ExampleKind::example4;
  const auto m = product_matrix(construct_example(kind, d));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(m, true));
}
BENCHMARK(BM_CanonicalKey)->ArgsProduct({{4, 6, 8, 10}, {3, 4}})->Unit(benchmark::kMillisecond);

static void BM_CubeSlackKey(benchmark::State& state) {
  const auto m = reference_cube_slack(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(m, true));
}
BENCHMARK(BM_CubeSlackKey)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(d));
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Facets(benchmark::State& state) {
  const auto pts = polytope_vertices(PolytopeKind::suspension_cube, static_cast<std::size_t>(state.range(0)));
  const auto method = state.range(1) == 0 ? FacetMethod::subsets : FacetMethod::double_description;
  for (auto _ : state) benchmark::DoNotOptimize(facets(pts, method));
}
BENCHMARK(BM_Facets)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Facets)->Args({7, 1})->Args({8, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
