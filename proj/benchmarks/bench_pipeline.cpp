#include <benchmark/benchmark.h>

#include "fibered_floer/rank_engine.hpp"

namespace {

using namespace fibered_floer;

TwistWord alternating(int genus, int pairs, std::int64_t power) {
  std::vector<DehnTwist> twists;
  for (int i = 0; i < pairs; ++i) {
    twists.push_back({Curve::gamma(), power});
    twists.push_back({Curve::delta(), -power});
  }
  return TwistWord::make(genus, twists);
}

void BM_ComputeRankAlternating(benchmark::State& state) {
  const TwistWord w = alternating(4, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(compute_rank(w).total_rank);
  state.SetLabel("T=" + abs_trace(w).get_str());
}
BENCHMARK(BM_ComputeRankAlternating)->DenseRange(1, 5);

void BM_ComputeRankSame(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const TwistWord w = TwistWord::make(5, {{Curve::gamma(), m}, {Curve::delta(), m}});
  for (auto _ : state) benchmark::DoNotOptimize(compute_rank(w).total_rank);
}
BENCHMARK(BM_ComputeRankSame)->RangeMultiplier(2)->Range(1, 32);

void BM_SymmetricLefschetz(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const TwistWord w = alternating(g, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_lefschetz(w, g - 1));
}
BENCHMARK(BM_SymmetricLefschetz)->RangeMultiplier(2)->Range(4, 64);

void BM_ProductCensus(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const CaseDiagram d = build_diagram(TwistWord::identity(g));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_level(d, g / 2).pairs_total);
}
BENCHMARK(BM_ProductCensus)->DenseRange(3, 9, 2);

}  // namespace

BENCHMARK_MAIN();
