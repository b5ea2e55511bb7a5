#include "btg/cocycle.hpp"
#include "btg/dimension.hpp"
#include "btg/gasket.hpp"
#include "btg/itm.hpp"
#include "btg/renorm.hpp"
#include "btg/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace btg;

static void BM_Pressure(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pressure(n, 1.6L));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Pressure)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_Render(benchmark::State& state) {
  RenderConfig c;
  c.depth = static_cast<int>(state.range(0));
  c.resolution = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(render(c).bits.data());
}
BENCHMARK(BM_Render)->Args({12, 1024})->Args({18, 4096})->Unit(benchmark::kMillisecond);

static void BM_Lyapunov(benchmark::State& state) {
  LyapunovOptions o;
  o.steps = static_cast<std::size_t>(state.range(0));
  o.trials = 1;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(lyapunov_estimate(o).mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Lyapunov)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_ConeSupDnorm(benchmark::State& state) {
  Mat3 m = product(random_word(1, static_cast<std::size_t>(state.range(0)))).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(cone_sup_dnorm(m).value);
}
BENCHMARK(BM_ConeSupDnorm)->Arg(4)->Arg(64);

static void BM_Classify(benchmark::State& state) {
  BtParams p(make_rational(61803, 100000), make_rational(23607, 100000));
  for (auto _ : state) benchmark::DoNotOptimize(classify(p, 1000));
}
BENCHMARK(BM_Classify);

static void BM_AttractorIterates(benchmark::State& state) {
  BtParams p(make_rational(57, 97), make_rational(31, 89));
  for (auto _ : state) benchmark::DoNotOptimize(attractor_iterates(p, 10000).stabilized);
}
BENCHMARK(BM_AttractorIterates)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
