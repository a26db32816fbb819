#include <benchmark/benchmark.h>

#include "circlehilb/gorenstein.hpp"
#include "circlehilb/laurent_coefficients.hpp"

using namespace circlehilb;

namespace {

void BM_GammasSchur(benchmark::State& state) {
  auto v = WeightVector::validate({-501, 500, 503});
  for (auto _ : state) benchmark::DoNotOptimize(gammas_schur(v));
}
BENCHMARK(BM_GammasSchur);

void BM_GammasGeneric(benchmark::State& state) {
  auto v = WeightVector::validate({-7, -3, 4, 11, 13});
  for (auto _ : state) benchmark::DoNotOptimize(gammas_generic(v));
}
BENCHMARK(BM_GammasGeneric);

void BM_AnalyzeShortCircuit(benchmark::State& state) {
  auto v = WeightVector::validate({-501, 500, 503});
  for (auto _ : state) benchmark::DoNotOptimize(analyze(v));
}
BENCHMARK(BM_AnalyzeShortCircuit);

}  // namespace
