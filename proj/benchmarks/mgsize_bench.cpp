#include <benchmark/benchmark.h>

#include "mgsize/metrics.hpp"
#include "mgsize/optimize/grid_search.hpp"
#include "mgsize/optimize/pareto.hpp"
#include "mgsize/random.hpp"

namespace {

const mgsize::Scenario& scenario() {
  static const mgsize::Scenario s = mgsize::bundled_scenario();
  return s;
}

void BM_SimulateYear(benchmark::State& state) {
  const auto d = mgsize::Design::with_capacities(418, 123, 0, 704, 255, 500);
  for (auto _ : state) benchmark::DoNotOptimize(mgsize::simulate_year(scenario(), d));
  state.SetItemsProcessed(state.iterations() * mgsize::kHoursPerYear);
}
BENCHMARK(BM_SimulateYear)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
  const auto d = mgsize::Design::with_capacities(418, 123, 0, 704, 255, 500);
  for (auto _ : state) benchmark::DoNotOptimize(mgsize::evaluate(d, scenario()));
}
BENCHMARK(BM_Evaluate)->Unit(benchmark::kMillisecond);

void BM_ParetoFilter(benchmark::State& state) {
  mgsize::Rng rng(1);
  std::vector<mgsize::MetricVector> pool(static_cast<std::size_t>(state.range(0)));
  for (auto& m : pool) {
    m.npc_usd = rng.uniform(4e6, 7e6);
    m.reliability = rng.uniform(0.99, 1.0);
    m.efficiency_pct = rng.uniform(70, 99);
    m.co2_kg_per_yr = rng.uniform(-4e5, 4e5);
  }
  for (auto _ : state) benchmark::DoNotOptimize(mgsize::pareto_indices(pool));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ParetoFilter)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_GridSearch(benchmark::State& state) {
  const auto space = mgsize::parse_search_space(
      "pv=0:600:300,wt=0:250:125,dg=0,bess=0:1000:500,conv=100:400:300");
  mgsize::GridSearchOptions opt;
  opt.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mgsize::grid_search(scenario(), space, opt));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(space.size()));
}
BENCHMARK(BM_GridSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
