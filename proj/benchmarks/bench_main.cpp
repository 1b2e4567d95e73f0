#include <benchmark/benchmark.h>

#include "tqft/coloring.hpp"
#include "tqft/density.hpp"
#include "tqft/irreducibility.hpp"
#include "tqft/recoupling.hpp"
#include "tqft/tl_oracle.hpp"

using namespace tqft;

namespace {

RingSpec ring_for(int64_t p) { return p == 0 ? RingSpec::generic() : RingSpec::root_of_unity(static_cast<int>(p)); }

void BM_QuantumFactorial(benchmark::State& state) {
  const RingSpec r = ring_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quantum_factorial(static_cast<int>(state.range(1)), r));
}
BENCHMARK(BM_QuantumFactorial)->Args({0, 12})->Args({11, 10})->Args({31, 30});

void BM_Tet(benchmark::State& state) {
  const RingSpec r = ring_for(state.range(0));
  const int c = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tet(c, c, c, c, c, c, r));
}
BENCHMARK(BM_Tet)->Args({0, 2})->Args({0, 4})->Args({0, 6})->Args({11, 4});

void BM_FusionMatrix(benchmark::State& state) {
  const RingSpec r = ring_for(state.range(0));
  const int c = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fusion_matrix(c, c, c, c, r));
}
BENCHMARK(BM_FusionMatrix)->Args({0, 2})->Args({0, 4})->Args({11, 4});

void BM_OracleTetrahedron(benchmark::State& state) {
  const RingSpec r = ring_for(state.range(0));
  const int c = static_cast<int>(state.range(1));
  const ColoredNetwork net = ColoredNetwork::tetrahedron(c, c, c, c, c, c);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_network(net, r));
}
BENCHMARK(BM_OracleTetrahedron)->Args({0, 2})->Args({7, 2})->Args({0, 4})->Unit(benchmark::kMillisecond);

void BM_Dimension(benchmark::State& state) {
  const RingSpec r = RingSpec::root_of_unity(11);
  const int g = static_cast<int>(state.range(0));
  const std::vector<int> colors(static_cast<size_t>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(dimension(g, static_cast<int>(colors.size()), colors, r));
}
BENCHMARK(BM_Dimension)->Args({0, 6})->Args({3, 4})->Args({8, 2});

void BM_CertifyV04(benchmark::State& state) {
  const RingSpec r = ring_for(state.range(0));
  const int c = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(certify_v04(r, c, c, c, c));
}
BENCHMARK(BM_CertifyV04)->Args({7, 2})->Args({11, 4})->Args({0, 2})->Unit(benchmark::kMillisecond);

void BM_CertifyIrreducible(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const std::vector<int> colors(static_cast<size_t>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(certify_irreducible(7, g, static_cast<int>(colors.size()), colors));
}
BENCHMARK(BM_CertifyIrreducible)->Args({0, 6})->Args({1, 2})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_CertifyDense(benchmark::State& state) {
  std::vector<int> colors(static_cast<size_t>(state.range(0)), 1);
  if (colors.size() % 2) colors.back() = 2;
  for (auto _ : state) benchmark::DoNotOptimize(certify_dense(static_cast<int>(colors.size()), colors));
}
BENCHMARK(BM_CertifyDense)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
