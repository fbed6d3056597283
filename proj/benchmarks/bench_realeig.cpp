#include <benchmark/benchmark.h>

#include "realeig/eigen.hpp"
#include "realeig/experiments.hpp"
#include "realeig/parser.hpp"
#include "realeig/realroots.hpp"
#include "realeig/topology.hpp"

using namespace realeig;

namespace {

// Product of (x - k) for k = 1..n: n well separated real roots.
UniPoly wilkinson(int n) {
  UniPoly p = UniPoly::constant(1);
  for (int k = 1; k <= n; ++k) p = p * UniPoly::linear_root(k);
  return p;
}

Form bombieri(int n, int d, std::uint64_t i) { return sample_bombieri({.n = n, .d = d, .count = 1, .seed = 42}, i); }

}  // namespace

static void BM_SturmCount(benchmark::State& state) {
  UniPoly p = wilkinson(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sturm_count(p));
}
BENCHMARK(BM_SturmCount)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_IsolateRealRoots(benchmark::State& state) {
  UniPoly p = wilkinson(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateRealRoots)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_BinaryEigen(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(real_eigen_count_binary(bombieri(2, d, i++)).t());
}
BENCHMARK(BM_BinaryEigen)->DenseRange(3, 8)->Unit(benchmark::kMicrosecond);

static void BM_TernaryEigen(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(real_eigen_count_ternary(bombieri(3, d, i++)).t());
}
BENCHMARK(BM_TernaryEigen)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Topology(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    Form f = bombieri(3, d, i++);
    try {
      benchmark::DoNotOptimize(count_components(f).ovals);
    } catch (const std::exception&) {
    }
  }
}
BENCHMARK(BM_Topology)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_HyperbolicSextic(benchmark::State& state) {
  SplitMix64 rng(7);
  Form f = random_hyperbolic(rng, 6);
  for (auto _ : state) benchmark::DoNotOptimize(real_eigen_count_ternary(f).t());
}
BENCHMARK(BM_HyperbolicSextic)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_CubicPipeline(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate_sample(bombieri(3, 3, i++), Conditioner::Ovals, {.morse = true}).t);
}
BENCHMARK(BM_CubicPipeline)->Unit(benchmark::kMillisecond);

static void BM_Parse(benchmark::State& state) {
  const std::string text = print_form(bombieri(3, 6, 0));
  for (auto _ : state) benchmark::DoNotOptimize(parse_form(text));
}
BENCHMARK(BM_Parse)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
