#include <benchmark/benchmark.h>

#include "expoly/battery.hpp"
#include "expoly/decompose.hpp"
#include "expoly/gridlab.hpp"
#include "expoly/text.hpp"

using namespace expoly;

static void BM_SumRankSumOfSquares(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const ExpPoly q = sum_of_squares(N);
  const GridBox box = GridBox::cube(N, 0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sum_rank(q, box).rank);
}
BENCHMARK(BM_SumRankSumOfSquares)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_SumRankWindow(benchmark::State& state) {
  const ExpPoly f = parse_expr("(t1^2 - 3)*exp(2) + t1*exp(-1/2) + 5");
  const GridBox box = GridBox::cube(1, 0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sum_rank(f, box).rank);
}
BENCHMARK(BM_SumRankWindow)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

static void BM_DecomposeSum(benchmark::State& state) {
  const ExpPoly f = parse_expr("t1^3*exp(2) + (t1 - 1)*exp(3) + t1^2");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_sum(f, n).order());
}
BENCHMARK(BM_DecomposeSum)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_VerifyWitness(benchmark::State& state) {
  const ExpPoly f = parse_expr("t1^3*exp(2) + (t1 - 1)*exp(3) + t1^2");
  const auto n = static_cast<std::size_t>(state.range(0));
  const DecompWitness w = decompose_sum(f, n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_witness(f, w).ok);
}
BENCHMARK(BM_VerifyWitness)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_ReconstructGep(benchmark::State& state) {
  Rng rng(static_cast<std::uint64_t>(state.range(0)));
  const ExpPoly f = random_exppoly(rng, BatterySpec{1, 3, static_cast<unsigned>(state.range(0)), false});
  const auto deg = static_cast<std::int64_t>(f.degree());
  const GridFunction g = sample(f, GridBox::cube(1, 0, 4 * (deg + 1) + 2));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_gep(g).order);
  state.counters["degree"] = static_cast<double>(deg);
}
BENCHMARK(BM_ReconstructGep)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
