#include <benchmark/benchmark.h>

#include "circlehilb/hilbert.hpp"

using namespace circlehilb;

namespace {

void BM_HilbertFourWeights(benchmark::State& state) {
  auto v = WeightVector::validate({-1, -2, 1, 14});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(v));
}
BENCHMARK(BM_HilbertFourWeights);

void BM_HilbertDegenerate(benchmark::State& state) {
  auto v = WeightVector::validate({-3, -3, 2, 5});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(v));
}
BENCHMARK(BM_HilbertDegenerate);

void BM_MolienOracle(benchmark::State& state) {
  auto v = WeightVector::validate({-1, -2, 1, 14});
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(molien_coefficients(v, depth));
}
BENCHMARK(BM_MolienOracle)->Arg(50)->Arg(200);

// Weights in the hundreds; denominator degree above 2000.
void BM_HilbertLargeWeights(benchmark::State& state) {
  auto v = WeightVector::validate({-501, 500, 503});
  HilbertOptions opts;
  opts.verify_depth = 50;
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(v, opts));
}
BENCHMARK(BM_HilbertLargeWeights)->Iterations(1)->Unit(benchmark::kSecond);

}  // namespace
