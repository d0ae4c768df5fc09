#include <benchmark/benchmark.h>

#include "richwords/phi_search.hpp"
#include "richwords/richness.hpp"

using namespace richwords;

static void BM_PhiSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_serial(n, Alphabet::standard(2)));
}
BENCHMARK(BM_PhiSerial)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_PhiOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PhiOptions options{.shards = static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(phi(n, Alphabet::standard(2), options));
}
BENCHMARK(BM_PhiOmp)->ArgsProduct({{14, 16}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_EnumerateTernary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_rich(n, Alphabet::standard(3), [](PalIndex&) {}));
  }
}
BENCHMARK(BM_EnumerateTernary)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
