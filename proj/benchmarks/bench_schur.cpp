#include <benchmark/benchmark.h>

#include "circlehilb/schur.hpp"

using namespace circlehilb;

namespace {

SplitVariables sample(std::size_t k, std::size_t m) {
  SplitVariables s;
  for (std::size_t i = 0; i < k; ++i) s.xs.push_back(frac(-static_cast<long>(2 * i + 3), 2));
  for (std::size_t i = 0; i < m; ++i) s.ys.push_back(frac(static_cast<long>(3 * i + 1), 4));
  return s;
}

void BM_PartialSchurDet(benchmark::State& state) {
  auto k = static_cast<std::size_t>(state.range(0));
  auto s = sample(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(partial_schur_det(0, s));
}
BENCHMARK(BM_PartialSchurDet)->DenseRange(1, 4);

void BM_PartialSchurExpansion(benchmark::State& state) {
  auto k = static_cast<std::size_t>(state.range(0));
  auto s = sample(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(partial_schur_expansion(0, s));
}
BENCHMARK(BM_PartialSchurExpansion)->DenseRange(1, 4);

void BM_PartialSchurTableaux(benchmark::State& state) {
  auto k = static_cast<std::size_t>(state.range(0));
  auto s = sample(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(partial_schur_tableaux(0, s));
}
BENCHMARK(BM_PartialSchurTableaux)->DenseRange(1, 4);

}  // namespace
