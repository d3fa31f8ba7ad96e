#include "tork/graded_module.hpp"
#include "tork/hochster.hpp"
#include "tork/koszul.hpp"
#include "tork/simplicial_complex.hpp"
#include "tork/sparse_matrix.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace tork;

SimplicialComplex full_simplex(int m) {
  VertexList all;
  for (int v = 1; v <= m; ++v) all.push_back(v);
  return SimplicialComplex::from_facets(m, {all});
}

SimplicialComplex cycle(int m) {
  std::vector<VertexList> edges;
  for (int v = 1; v <= m; ++v) edges.push_back({v, v % m + 1});
  return SimplicialComplex::from_facets(m, edges);
}

void BM_StrandBuild(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const GradedModule module = stanley_reisner(full_simplex(m), static_cast<std::size_t>(m));
  for (auto _ : state) benchmark::DoNotOptimize(strand(module, static_cast<std::size_t>(m)));
}
BENCHMARK(BM_StrandBuild)->DenseRange(3, 6);

void BM_StrandRank(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const GradedModule module = stanley_reisner(full_simplex(m), static_cast<std::size_t>(m));
  const KoszulStrand s = strand(module, static_cast<std::size_t>(m));
  std::size_t widest = 1;
  for (std::size_t i = 1; i < s.d.size(); ++i) {
    if (s.d[i].rows() * s.d[i].cols() > s.d[widest].rows() * s.d[widest].cols()) widest = i;
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(s.d[widest]));
}
BENCHMARK(BM_StrandRank)->DenseRange(3, 6);

void BM_StanleyReisnerBetti(benchmark::State& state) {
  const SimplicialComplex k = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stanley_reisner_betti(k));
}
BENCHMARK(BM_StanleyReisnerBetti)->DenseRange(4, 7);

void BM_ModuleBetti(benchmark::State& state) {
  const GradedModule module = random_artinian_module(static_cast<int>(state.range(0)), 11, 3);
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(module));
}
BENCHMARK(BM_ModuleBetti)->DenseRange(2, 5);

void BM_HochsterBetti(benchmark::State& state) {
  const SimplicialComplex k = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(k));
}
BENCHMARK(BM_HochsterBetti)->DenseRange(4, 10, 2);

void BM_Enumerate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_complexes(m));
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 5);

}  // namespace

BENCHMARK_MAIN();
