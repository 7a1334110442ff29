#include <benchmark/benchmark.h>

#include "kcover/cgs.hpp"
#include "kcover/experiment.hpp"
#include "kcover/metrics.hpp"
#include "kcover/rng.hpp"
#include "kcover/scheduler_centralized.hpp"
#include "kcover/sim_engine.hpp"
#include "kcover/topology.hpp"

using namespace kcover;

namespace {

std::vector<SensorNode> reference_grid() {
  return generate_topology({TopologyKind::Grid, 10, 10, 10.0, 0, 0, 0}, 1, 15.0,
                           40.0, 20.0);
}

void BM_BuildCoverageGraph(benchmark::State& state) {
  const auto nodes = reference_grid();
  const RegionGrid grid = RegionGrid::over_area({0, 0, 90, 90}, 5.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_coverage_graph(nodes, grid, CoverageMode::ExactCenter));
  }
}
BENCHMARK(BM_BuildCoverageGraph);

void BM_SampledCoverage(benchmark::State& state) {
  const auto nodes = reference_grid();
  const Rect area{0, 0, 90, 90};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampled_coverage_fractions(nodes, area, 1.0, 3));
  }
}
BENCHMARK(BM_SampledCoverage);

void BM_CentralizedSchedule(benchmark::State& state) {
  const auto nodes = reference_grid();
  const RegionGrid grid = RegionGrid::over_area({0, 0, 90, 90}, 5.0);
  const CoverageGraph graph =
      build_coverage_graph(nodes, grid, CoverageMode::ExactCenter);
  for (auto _ : state) {
    benchmark::DoNotOptimize(centralized_schedule(nodes, graph, 3, 2.0));
  }
}
BENCHMARK(BM_CentralizedSchedule);

void BM_CgsElection(benchmark::State& state) {
  const auto nodes = reference_grid();
  const RegionTemplate tmpl = local_region_template(15.0, 6, 0.86);
  const Rect area{0, 0, 90, 90};
  DeliveryFn deliver = [](int mi, const SensorNode& sender,
                          std::span<const SensorNode> all) {
    SubstreamRng rng(1, kStreamLoss, 1, static_cast<std::uint64_t>(mi));
    return broadcast(sender, all, 0.05, rng);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_election(nodes, tmpl, area, {3, 2.0, 1.0, 10.0}, deliver));
  }
}
BENCHMARK(BM_CgsElection);

void BM_Figure5Run(benchmark::State& state) {
  SimulationConfig config = figure5_preset("unused").base;
  config.max_periods = 40;
  config.scheduler = SchedulerKind::Cgs;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(config));
  }
}
BENCHMARK(BM_Figure5Run)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
