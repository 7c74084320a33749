#include <benchmark/benchmark.h>

#include "aic/diffusion.hpp"
#include "aic/rng.hpp"
#include "aic/synthetic.hpp"

namespace {

aic::Graph bench_graph(aic::NodeId n) {
  return aic::preferential_attachment(n, 2.0, 0.1, aic::RandomStream(7));
}

void BM_SimulateCascade(benchmark::State& state) {
  const aic::Graph g = bench_graph(static_cast<aic::NodeId>(state.range(0)));
  std::vector<aic::NodeId> ids;
  for (aic::NodeId v = 0; v < 50; ++v) ids.push_back(v);
  const aic::SeedSet seeds = aic::SeedSet::of(ids);

  std::uint64_t trial = 0;
  aic::RandomStream base(11);
  for (auto _ : state) {
    aic::RandomStream rng = base.substream(trial++);
    const aic::DiffusionOutcome out = aic::simulate_aic(g, seeds, rng);
    benchmark::DoNotOptimize(out.activated_edges);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_SimulateCascade)->Arg(10000)->Arg(50000);

void BM_ExactEnumerate(benchmark::State& state) {
  const aic::Graph g =
      aic::random_gnm(10, static_cast<std::size_t>(state.range(0)), 0.1, 0.9,
                      aic::RandomStream(3));
  const aic::SeedSet seeds = aic::SeedSet::of({0, 1});
  for (auto _ : state) {
    const aic::ExactResult r = aic::exact_enumerate(g, seeds);
    benchmark::DoNotOptimize(r.sigma_att);
  }
}
BENCHMARK(BM_ExactEnumerate)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
