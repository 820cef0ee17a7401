// Serial reference against the OpenMP kernels. Run with OMP_NUM_THREADS set to
// compare thread counts; on one core the parallel rows measure scheduling overhead.

#include <benchmark/benchmark.h>

#include "fivevec/cli.hpp"
#include "fivevec/curvature.hpp"

namespace {

using namespace fv;

// Curved metric N^T eta N with N(2,3) = x0 and an S-form with every slot populated.
ConnectionH bench_connection(int degree) {
  Matrix<Poly4> N = lift(Matrix<Rational>::identity(4));
  N(2, 3) = Poly4::var(0);
  MetricG g(N.transpose() * MetricG::minkowski().matrix() * N);
  SForm S;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int C = 0; C < 5; ++C) {
        Poly4 v(frac(a + 2 * b + C + 1, 3));
        if (degree > 0) v += Poly4::var((a + b + C) % 4) * Poly4(frac(1, b + 1));
        S.set(a, b, C, v);
      }
  return build_H(g, S, christoffel(g));
}

void BM_CurvatureSerial(benchmark::State& state) {
  ConnectionH H = bench_connection(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(curvature_from_H_serial(H));
}

void BM_CurvatureOpenMP(benchmark::State& state) {
  ConnectionH H = bench_connection(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(curvature_from_H(H));
}

BENCHMARK(BM_CurvatureSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurvatureOpenMP)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Whole curved battery; its checks are the other parallel loop.
void BM_CurvedSuite(benchmark::State& state) {
  ModelFile m = parse_model(R"(
metric = [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, "-x0"], [0, 0, "-x0", "-1 - x0^2"]]
[[sform]]
alpha = 0
beta = 1
A = 5
poly = "1/2 + x2"
)");
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(m, "curved", 1, "1e-9"));
}
BENCHMARK(BM_CurvedSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
