#include <benchmark/benchmark.h>

#include <random>

#include "unogrid/cobordism.hpp"
#include "unogrid/corpus.hpp"
#include "unogrid/gc_complex.hpp"
#include "unogrid/homology.hpp"
#include "unogrid/smith.hpp"

using namespace unogrid;

namespace {

void BM_BuildUnoriented(benchmark::State& state) {
  const auto g = shifted_grid(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_unoriented(g));
  state.SetLabel("n=" + std::to_string(state.range(0)));
}
BENCHMARK(BM_BuildUnoriented)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_BuildUnorientedThreads(benchmark::State& state) {
  const auto g = shifted_grid(7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_unoriented(g, {8, static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_BuildUnorientedThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BuildMultivariable(benchmark::State& state) {
  const auto& g = corpus_grid("trefoil5");
  for (auto _ : state) benchmark::DoNotOptimize(build_complex(g));
}
BENCHMARK(BM_BuildMultivariable)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const auto c = build_unoriented(shifted_grid(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(compute_homology(c));
}
BENCHMARK(BM_Homology)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_BandMap(benchmark::State& state) {
  const auto& g = corpus_grid("trefoil5");
  const SwitchSite s{0, 4, SiteLetter::Mixed};
  const auto c = build_unoriented(g);
  const auto c2 = build_unoriented(apply_switch(g, s));
  const BandMapChoice choice{s, BandFlavor::Nu, natural_direction(g, s)};
  for (auto _ : state) benchmark::DoNotOptimize(band_map(g, c, c2, choice));
}
BENCHMARK(BM_BandMap)->Unit(benchmark::kMicrosecond);

void BM_SmithReduce(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 2) m.at(i, j) = PolyF2U::monomial(static_cast<int>(i % 3 + j % 3));
  for (auto _ : state) benchmark::DoNotOptimize(smith_reduce(m));
}
BENCHMARK(BM_SmithReduce)->Arg(8)->Arg(12)->Arg(32);

}  // namespace
BENCHMARK_MAIN();
