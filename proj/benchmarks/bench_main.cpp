#include <benchmark/benchmark.h>

#include "pqvol/closed_forms.hpp"
#include "pqvol/ehrhart.hpp"
#include "pqvol/graph.hpp"
#include "pqvol/interior.hpp"
#include "pqvol/matching.hpp"

using namespace pqvol;

namespace {

void BM_InteriorCompleteGraph(benchmark::State& state) {
  const BipartiteGraph d = bipartite_double(make_complete(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(interior_polynomial(d));
}
BENCHMARK(BM_InteriorCompleteGraph)->DenseRange(3, 6);

void BM_InteriorWheel(benchmark::State& state) {
  const BipartiteGraph d = bipartite_double(make_wheel(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(interior_polynomial(d));
}
BENCHMARK(BM_InteriorWheel)->DenseRange(3, 6);

void BM_HypertreeEnumeration(benchmark::State& state) {
  const BipartiteGraph d = bipartite_double(make_wheel(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hypertrees(d));
}
BENCHMARK(BM_HypertreeEnumeration)->DenseRange(3, 6);

void BM_SpanningTreeOracle(benchmark::State& state) {
  const BipartiteGraph d = bipartite_double(make_wheel(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hypertrees_via_spanning_trees(d));
}
BENCHMARK(BM_SpanningTreeOracle)->DenseRange(3, 4);

void BM_PmsPolynomial(benchmark::State& state) {
  const Graph g = to_graph(bipartite_double(make_cycle(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(pms_polynomial(g));
}
BENCHMARK(BM_PmsPolynomial)->DenseRange(4, 7);

void BM_MatchingPolynomial(benchmark::State& state) {
  const Graph g = to_graph(bipartite_double(make_cycle(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(matching_generating_polynomial(g));
}
BENCHMARK(BM_MatchingPolynomial)->DenseRange(4, 7);

void BM_EhrhartOracle(benchmark::State& state) {
  const Graph g = make_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hstar_via_ehrhart(g, 1));
}
BENCHMARK(BM_EhrhartOracle)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_LatticePointCount(benchmark::State& state) {
  const RootPolytope p(bipartite_double(make_cycle(4)));
  const long t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_point_count(p, t, 1));
}
BENCHMARK(BM_LatticePointCount)->DenseRange(1, 6);

void BM_WheelClosedForm(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(hstar_wheel(n));
}
BENCHMARK(BM_WheelClosedForm)->RangeMultiplier(2)->Range(8, 64);

void BM_FPoly(benchmark::State& state) {
  const long size = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(f_poly(size, size));
}
BENCHMARK(BM_FPoly)->RangeMultiplier(2)->Range(4, 16);

void BM_CompleteMultipartite(benchmark::State& state) {
  const std::vector<int> parts(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(hstar_complete_multipartite(parts));
}
BENCHMARK(BM_CompleteMultipartite)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
