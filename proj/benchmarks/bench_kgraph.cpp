#include <benchmark/benchmark.h>

#include <random>

#include "kgraph/boundary.hpp"
#include "kgraph/collections.hpp"
#include "kgraph/corpus.hpp"
#include "kgraph/exhaustive.hpp"
#include "kgraph/ideals.hpp"
#include "kgraph/universe.hpp"

using namespace kgraph;

namespace {

KGraph omega_of(std::uint32_t m, std::uint32_t n) { return omega(Degree{m, n}); }

void BM_ValidateOmega(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  GraphSpec spec = omega_spec(Degree{m, m, 1});
  for (auto _ : state) benchmark::DoNotOptimize(validate(spec).ok());
}
BENCHMARK(BM_ValidateOmega)->Arg(1)->Arg(2)->Arg(3);

void BM_NormalForm(benchmark::State& state) {
  KGraph g = loops(2, 3);
  std::mt19937_64 rng(1);
  std::vector<EdgeId> word;
  for (std::int64_t i = 0; i < state.range(0); ++i) word.push_back(static_cast<EdgeId>(rng() % g.edge_count()));
  for (auto _ : state) benchmark::DoNotOptimize(path_from_word(g, word));
}
BENCHMARK(BM_NormalForm)->Arg(8)->Arg(32)->Arg(128);

void BM_ExhaustiveEdges(benchmark::State& state) {
  RandomOptions o;
  o.k = 2;
  o.vertices = static_cast<std::size_t>(state.range(0));
  o.density = 0.5;
  o.seed = 3;
  o.allow_cycles = true;
  KGraph g = random_kgraph(o);
  std::vector<EdgeSet> sets;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!g.edges_at(v).empty()) sets.push_back(all_edges_at(g, v));
  for (auto _ : state)
    for (const auto& e : sets) benchmark::DoNotOptimize(is_exhaustive_edges(g, e));
}
BENCHMARK(BM_ExhaustiveEdges)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumerateEfficient(benchmark::State& state) {
  KGraph g = omega_of(static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_efficient(g).size());
}
BENCHMARK(BM_EnumerateEfficient)->Arg(1)->Arg(2)->Arg(3);

void BM_EnumerateSatiated(benchmark::State& state) {
  KGraph g = omega_of(static_cast<std::uint32_t>(state.range(0)), 1);
  FESpace space(g);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_satiated(space).size());
}
BENCHMARK(BM_EnumerateSatiated)->Arg(1)->Arg(2);

void BM_BoundaryRelations(benchmark::State& state) {
  KGraph g = omega_of(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto rep = Representation::build(g, {});
    benchmark::DoNotOptimize(verify_tck(g, rep).ok());
  }
}
BENCHMARK(BM_BoundaryRelations)->Arg(1)->Arg(2);

void BM_IdealLabels(benchmark::State& state) {
  KGraph g = omega_of(static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideal_labels(g, {}).size());
}
BENCHMARK(BM_IdealLabels)->Arg(1)->Arg(2);

}  // namespace
BENCHMARK_MAIN();
