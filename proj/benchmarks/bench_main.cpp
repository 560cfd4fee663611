#include <random>

#include <benchmark/benchmark.h>

#include "sqenergy/canonical.hpp"
#include "sqenergy/charpoly.hpp"
#include "sqenergy/enumerate.hpp"
#include "sqenergy/families.hpp"
#include "sqenergy/spectral.hpp"

namespace {

sqe::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  sqe::GraphBuilder b(n);
  for (sqe::Vertex u = 0; u < n; ++u) {
    for (sqe::Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

void BM_Eigenvalues(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sqe::eigenvalues(g));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(8, 256);

void BM_CharPolyExact(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sqe::char_poly_exact(g));
}
BENCHMARK(BM_CharPolyExact)->RangeMultiplier(2)->Range(8, 32);

void BM_CanonicalRandom(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sqe::canonical_labelling(g));
}
BENCHMARK(BM_CanonicalRandom)->DenseRange(8, 40, 8);

// Vertex-transitive inputs exercise automorphism pruning.
void BM_CanonicalCycle(benchmark::State& state) {
  const auto g = sqe::cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqe::canonical_labelling(g));
}
BENCHMARK(BM_CanonicalCycle)->DenseRange(8, 64, 14);

void BM_EnumerateConnected(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    sqe::enumerate_connected(n, [&](const sqe::Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_EnumerateUnicyclic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    sqe::enumerate_unicyclic_nonbipartite(n, [&](const sqe::Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateUnicyclic)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
