// Serial reference kernels against their OpenMP counterparts. The thread
// count is the benchmark argument; 0 selects the serial reference.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "ifslab/certificate.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/landmarks.hpp"
#include "ifslab/numerics.hpp"
#include "ifslab/paramspace.hpp"
#include "ifslab/reference.hpp"

using namespace ifslab;

namespace {

const Complex kLambda(0.5957439, 0.2544259);

void thread_args(benchmark::internal::Benchmark* b) {
  b->Arg(0)->Arg(1);
  for (int t = 2; t <= omp_get_max_threads(); t *= 2) b->Arg(t);
  b->UseRealTime()->Unit(benchmark::kMillisecond);
}

void BM_AttractorSample(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PointSet s = threads == 0 ? serial::attractor_sample(kLambda, 11, Alphabet::ternary)
                              : attractor_sample(kLambda, 11, Alphabet::ternary, threads);
    benchmark::DoNotOptimize(s.data());
  }
}
BENCHMARK(BM_AttractorSample)->Apply(thread_args);

void BM_EscapeGrid(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const Window w{-1.0, -1.0, 1.0, 1.0};
  for (auto _ : state) {
    EscapeGrid g = threads == 0 ? serial::escape_grid(w, 128, 128, ParamSet::M, 20)
                                : escape_grid(w, 128, 128, ParamSet::M, 20, threads);
    benchmark::DoNotOptimize(g.values.data());
  }
}
BENCHMARK(BM_EscapeGrid)->Apply(thread_args);

void BM_ConditionIII(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const Landmark lm = landmark(5);
  const Complex l = resolve_root(lm);
  for (auto _ : state) {
    auto r = threads == 0 ? serial::condition_iii(lm.series, l, 2, Variant::doubled)
                          : condition_iii(lm.series, l, 2, Variant::doubled, threads);
    benchmark::DoNotOptimize(r.data());
  }
}
BENCHMARK(BM_ConditionIII)->Apply(thread_args);

void BM_DirectedDistance(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  const PointSet a = attractor_sample(kLambda, 12, Alphabet::binary, 1);
  const PointSet b = attractor_sample(Complex(0.6, 0.25), 10, Alphabet::binary, 1);
  for (auto _ : state) {
    const double d = threads == 0 ? serial::directed_distance(a, b) : directed_distance(a, b, threads);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DirectedDistance)->Apply(thread_args);

}  // namespace

BENCHMARK_MAIN();
