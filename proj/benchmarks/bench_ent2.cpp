#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>

#include "ent2/decider.hpp"
#include "ent2/forbidden.hpp"
#include "ent2/game.hpp"
#include "ent2/generate.hpp"

namespace {

// Generated once per size and reused across benchmarks.
const ent2::Graph& zeta2_graph(std::int64_t n) {
  static std::map<std::int64_t, ent2::Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    ent2::Zeta2Params p;
    p.min_vertices = static_cast<std::size_t>(n);
    it = cache.emplace(n, ent2::generate_zeta2(static_cast<std::uint64_t>(n), p).graph).first;
  }
  return it->second;
}

void set_counters(benchmark::State& state, const ent2::Graph& g) {
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.vertex_count() + g.edge_count()));
  state.counters["n"] = static_cast<double>(g.vertex_count());
}

void BM_DecideSuperstructure(benchmark::State& state) {
  const ent2::Graph& g = zeta2_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ent2::decide_superstructure(g));
  set_counters(state, g);
}
BENCHMARK(BM_DecideSuperstructure)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_DecideVerdictOnly(benchmark::State& state) {
  const ent2::Graph& g = zeta2_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ent2::decide_superstructure(g, false));
  set_counters(state, g);
}
BENCHMARK(BM_DecideVerdictOnly)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_GlueTraversal(benchmark::State& state) {
  const ent2::Graph& g = zeta2_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ent2::decide_glue_traversal(g));
  set_counters(state, g);
}
BENCHMARK(BM_GlueTraversal)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_CheckConditions(benchmark::State& state) {
  const ent2::Graph& g = zeta2_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ent2::check_conditions(g));
  set_counters(state, g);
}
BENCHMARK(BM_CheckConditions)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_FindLongCycleOnCycle(benchmark::State& state) {
  const ent2::Graph g = ent2::cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ent2::find_long_cycle(g, 4));
  set_counters(state, g);
}
BENCHMARK(BM_FindLongCycleOnCycle)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_VerifyCertificate(benchmark::State& state) {
  const ent2::Zeta2Sample s = ent2::generate_zeta2(7, {1, 4, static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(ent2::verify_certificate(s.certificate, s.graph));
  set_counters(state, s.graph);
}
BENCHMARK(BM_VerifyCertificate)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMillisecond);

void BM_GameTwoCopsOnCycle(benchmark::State& state) {
  const ent2::DiGraph d = ent2::DiGraph::symmetrize(ent2::cycle_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ent2::solve_game(d, 2).cops_win_game());
}
BENCHMARK(BM_GameTwoCopsOnCycle)->DenseRange(5, 25, 5)->Unit(benchmark::kMillisecond);

void BM_GameEntanglementOnZeta2(benchmark::State& state) {
  const ent2::Graph g = ent2::generate_zeta2(3, {1, 3, static_cast<std::size_t>(state.range(0))}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(ent2::entanglement(g));
  state.counters["n"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_GameEntanglementOnZeta2)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
