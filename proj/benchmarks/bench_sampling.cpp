#include <benchmark/benchmark.h>

#include "aic/attitude_max.hpp"
#include "aic/ras.hpp"
#include "aic/rng.hpp"
#include "aic/synthetic.hpp"

namespace {

void BM_GenerateRRSample(benchmark::State& state) {
  const aic::Graph g = aic::preferential_attachment(
      static_cast<aic::NodeId>(state.range(0)), 2.0, 0.1, aic::RandomStream(7));
  aic::RandomStream rng(13);
  for (auto _ : state) {
    const aic::RRSample s = aic::generate_rr_sample(g, rng);
    benchmark::DoNotOptimize(s.members.size());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_GenerateRRSample)->Arg(10000)->Arg(100000);

void BM_EstimateAttitude(benchmark::State& state) {
  const aic::Graph g = aic::preferential_attachment(20000, 2.0, 0.1, aic::RandomStream(7));
  std::vector<aic::NodeId> ids;
  for (aic::NodeId v = 0; v < 20; ++v) ids.push_back(v);
  const aic::SeedSet seeds = aic::SeedSet::of(ids);
  for (auto _ : state) {
    const double est = aic::estimate_attitude(
        g, seeds, static_cast<std::uint64_t>(state.range(0)), aic::RandomStream(5));
    benchmark::DoNotOptimize(est);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateAttitude)->Arg(100000)->Arg(400000);

void BM_MaximizeAttitude(benchmark::State& state) {
  const aic::Graph g = aic::preferential_attachment(
      static_cast<aic::NodeId>(state.range(0)), 2.0, 0.1, aic::RandomStream(7));
  for (auto _ : state) {
    const aic::SelectionResult r =
        aic::maximize_attitude(g, 20, {0.2, 0.05}, aic::RandomStream(21));
    benchmark::DoNotOptimize(r.est_objective);
  }
}
BENCHMARK(BM_MaximizeAttitude)->Unit(benchmark::kMillisecond)->Arg(10000)->Arg(40000);

}  // namespace
