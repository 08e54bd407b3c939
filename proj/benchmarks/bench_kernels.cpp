#include "semishell/generate.hpp"
#include "semishell/oracle.hpp"
#include "semishell/shell.hpp"

#include <benchmark/benchmark.h>

using namespace semishell;

namespace {

ComplexMatrix random_mat(int n) {
  Rng rng(17);
  return rng.cgaussian_mat(n, n);
}

void BM_HermEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  const ComplexMatrix g = rng.cgaussian_mat(n, n);
  const ComplexMatrix h = 0.5 * (g + g.adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(h));
  state.SetComplexityN(n);
}
BENCHMARK(BM_HermEig)->RangeMultiplier(2)->Range(4, 128)->Complexity();

void BM_NumericalRadius(benchmark::State& state) {
  const ComplexMatrix m = random_mat(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(numerical_radius(m, 1e-9));
}
BENCHMARK(BM_NumericalRadius)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_DwRadius(benchmark::State& state) {
  const ComplexMatrix m = random_mat(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dw_radius(m, 1e-9, 5));
}
BENCHMARK(BM_DwRadius)->Arg(2)->Arg(4)->Arg(8);

void BM_BuildContext(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  const ComplexMatrix a = random_psd(rng, n, n / 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_context(a));
}
BENCHMARK(BM_BuildContext)->Arg(4)->Arg(16)->Arg(64);

void BM_Compress(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(11);
  const PositiveContext ctx = build_context(random_psd(rng, n, n / 3));
  const ComplexMatrix t = random_operator(rng, ctx, OperatorKind::RangeLifted);
  for (auto _ : state) benchmark::DoNotOptimize(compress(ctx, t));
}
BENCHMARK(BM_Compress)->Arg(4)->Arg(16)->Arg(64);

void BM_ShellSample(benchmark::State& state) {
  Rng rng(13);
  const PositiveContext ctx = build_context(random_psd(rng, 5, 1));
  const ComplexMatrix t = random_operator(rng, ctx, OperatorKind::RangeLifted);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        shell_sample(ctx, t, ShellMode::Compressed, static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_ShellSample)->Arg(100)->Arg(1000);

void BM_OracleOmega(benchmark::State& state) {
  Rng rng(19);
  const PositiveContext ctx = build_context(random_psd(rng, 4, 1));
  const ComplexMatrix t = random_operator(rng, ctx, OperatorKind::RangeLifted);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_estimate(ctx, t, OracleFunctional::Omega,
                                             static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_OracleOmega)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
