#include <benchmark/benchmark.h>

#include "efglat/bridge.hpp"
#include "efglat/efg.hpp"
#include "efglat/isomorphism.hpp"
#include "efglat/lattice.hpp"
#include "efglat/poset.hpp"

namespace {

using namespace efglat;

// Star with k leaves: 2^k configurations.
void BM_ExploreBoolean(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  EfgInstance e = lattice_to_efg(filter_lattice(antichain_poset(k)));
  for (auto _ : state) benchmark::DoNotOptimize(explore(e).size());
  state.counters["configs"] = static_cast<double>(std::size_t{1} << k);
}
BENCHMARK(BM_ExploreBoolean)->DenseRange(4, 14, 2);

void BM_EnumerateFiltersAntichain(benchmark::State& state) {
  Poset p = antichain_poset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_filters(p).size());
}
BENCHMARK(BM_EnumerateFiltersAntichain)->DenseRange(4, 16, 4);

// Two disjoint chains of length n: (n+1)^2 filters.
void BM_EnumerateFiltersTwoChains(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> labels;
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < 2 * n; ++i) labels.push_back("e" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    covers.emplace_back(i, i + 1);
    covers.emplace_back(n + i, n + i + 1);
  }
  Poset p = build_poset(labels, covers);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_filters(p).size());
}
BENCHMARK(BM_EnumerateFiltersTwoChains)->DenseRange(2, 10, 4);

void BM_CheckLatticeBoolean(benchmark::State& state) {
  Poset b = filter_lattice(antichain_poset(static_cast<std::size_t>(state.range(0)))).base();
  for (auto _ : state) benchmark::DoNotOptimize(check_lattice(b).size());
}
BENCHMARK(BM_CheckLatticeBoolean)->DenseRange(3, 8, 1);

void BM_IsDistributive(benchmark::State& state) {
  Lattice l = filter_lattice(antichain_poset(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_distributive(l).distributive);
}
BENCHMARK(BM_IsDistributive)->DenseRange(3, 8, 1);

void BM_DistributiveByTriples(benchmark::State& state) {
  Lattice l = filter_lattice(antichain_poset(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(distributive_by_triples(l).distributive);
}
BENCHMARK(BM_DistributiveByTriples)->DenseRange(3, 6, 1);

void BM_SimplifyBoolean(benchmark::State& state) {
  EfgInstance e = lattice_to_efg(filter_lattice(antichain_poset(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(simplify_efg(e).space.size());
}
BENCHMARK(BM_SimplifyBoolean)->DenseRange(2, 8, 2);

void BM_IsomorphismBoolean(benchmark::State& state) {
  Poset b = filter_lattice(antichain_poset(static_cast<std::size_t>(state.range(0)))).base();
  for (auto _ : state) benchmark::DoNotOptimize(poset_isomorphic(b, b).has_value());
}
BENCHMARK(BM_IsomorphismBoolean)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
