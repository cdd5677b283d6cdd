#include <benchmark/benchmark.h>

#include "giant/cloning.hpp"
#include "giant/contiguous.hpp"
#include "giant/direct.hpp"
#include "giant/graph_ops.hpp"
#include "giant/stats.hpp"

using namespace giant;

namespace {

void BM_ContiguousSample(benchmark::State& state) {
  const ModelParams params = make_params(state.range(0), 2.0);
  std::uint64_t rep = 0;
  for (auto _ : state) {
    RngStream stream(1, rep++);
    benchmark::DoNotOptimize(sample_giant(stream, params));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ContiguousSample)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_ContiguousSampleSimple(benchmark::State& state) {
  const ModelParams params = make_params(state.range(0), 2.0);
  GiantOptions opt;
  opt.simple = true;
  std::uint64_t rep = 0;
  for (auto _ : state) {
    RngStream stream(2, rep++);
    benchmark::DoNotOptimize(sample_giant(stream, params, opt));
  }
}
BENCHMARK(BM_ContiguousSampleSimple)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_DirectPipeline(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const double p = 2.0 / static_cast<double>(n);
  std::uint64_t rep = 0;
  for (auto _ : state) {
    RngStream stream(3, rep++);
    const MultiGraph g = sample_gnp(stream, n, p);
    benchmark::DoNotOptimize(extract_anatomy(g));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DirectPipeline)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_GnpOnly(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::uint64_t rep = 0;
  for (auto _ : state) {
    RngStream stream(4, rep++);
    benchmark::DoNotOptimize(sample_gnp(stream, n, 2.0 / n));
  }
}
BENCHMARK(BM_GnpOnly)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_ConfigurationPairing(benchmark::State& state) {
  const std::vector<std::uint32_t> degrees(state.range(0), 3);
  std::uint64_t rep = 0;
  for (auto _ : state) {
    RngStream stream(5, rep++);
    benchmark::DoNotOptimize(configuration_pairing(stream, degrees));
  }
}
BENCHMARK(BM_ConfigurationPairing)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_TwoCore(benchmark::State& state) {
  RngStream stream(6, 0);
  const MultiGraph g =
      sample_gnp(stream, static_cast<std::uint32_t>(state.range(0)),
                 2.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_core(g));
  }
}
BENCHMARK(BM_TwoCore)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Cola(benchmark::State& state) {
  std::uint64_t rep = 0;
  for (auto _ : state) {
    RngStream stream(7, rep++);
    const PoissonCell cell =
        sample_cell(stream, static_cast<std::uint32_t>(state.range(0)), 2.0);
    benchmark::DoNotOptimize(cola(cell));
  }
}
BENCHMARK(BM_Cola)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_KsStatistic(benchmark::State& state) {
  RngStream stream(8, 0);
  std::vector<double> a(state.range(0)), b(state.range(0));
  for (auto& x : a) x = stream.next_double();
  for (auto& x : b) x = stream.next_double();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ks_statistic(a, b));
  }
}
BENCHMARK(BM_KsStatistic)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
