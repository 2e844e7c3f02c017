#include <benchmark/benchmark.h>

#include "hsclab/kernels.hpp"
#include "hsclab/pointcurv.hpp"

using namespace hsc;

namespace {

const TripleEval& quartic() {
  static const TripleEval f(curvature_triple(quartic_profile(1, ratio(51, 100))));
  return f;
}

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_DenseHMin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dense_h_min(quartic(), -1, 1, 4000, 64, mode(state)));
}

void BM_SampleExtrema(benchmark::State& state) {
  auto u = linspace(-1, 1, 100000);
  for (auto _ : state) benchmark::DoNotOptimize(sample_extrema(quartic(), u, mode(state)));
}

void BM_TensorExtrema(benchmark::State& state) {
  KahlerCurvatureTensor f = flag_tensor();
  for (auto _ : state) benchmark::DoNotOptimize(h_extrema(f, 20000, 100, 1, mode(state)));
}

}  // namespace

// Argument 0 is the serial reference, 1 the OpenMP path.
BENCHMARK(BM_DenseHMin)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleExtrema)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TensorExtrema)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
