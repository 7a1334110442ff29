#include "kcover/scheduler_centralized.hpp"

#include <cmath>
#include <stdexcept>

namespace kcover {

double coverage_ratio(int region_degree, int k) {
  if (k < 1) throw std::invalid_argument("required coverage k must be >= 1");
  if (region_degree > k) return 1.0 / static_cast<double>(region_degree - k);
  return -1.0;
}

double drowsiness(double energy, double alpha,
                  std::span<const double> adjacent_ratios) {
  if (adjacent_ratios.empty()) return -1.0;
  double sum = 0.0;
  for (double ratio : adjacent_ratios) {
    if (ratio <= 0.0) return -1.0;
    sum += ratio;
  }
  return sum / std::pow(energy, alpha);
}

SchedulePartition centralized_schedule(std::span<const SensorNode> alive,
                                       const CoverageGraph& graph, int k,
                                       double alpha) {
  const std::size_t n = alive.size();
  if (graph.sensor_count() != n) {
    throw std::invalid_argument("graph must be built over exactly the alive nodes");
  }

  std::vector<int> degree(graph.region_count());
  // Regions the alive topology cannot k-cover stay under-covered no matter
  // who sleeps; they must not pin their coverers awake, or the result stops
  // being a minimal cover of the feasible regions.
  std::vector<bool> feasible(graph.region_count());
  for (std::size_t r = 0; r < graph.region_count(); ++r) {
    degree[r] = graph.region_degree(static_cast<int>(r));
    feasible[r] = degree[r] >= k;
  }

  std::vector<bool> asleep(n, false);
  SchedulePartition result;

  while (true) {
    int best = -1;
    double best_value = 0.0;
    for (std::size_t si = 0; si < n; ++si) {
      if (asleep[si]) continue;
      const auto& regions = graph.regions_of(static_cast<int>(si));
      double sum = 0.0;
      bool essential = true;  // a node with no feasible region stays awake
      for (int region : regions) {
        if (!feasible[static_cast<std::size_t>(region)]) continue;
        const double ratio = coverage_ratio(degree[static_cast<std::size_t>(region)], k);
        if (ratio <= 0.0) {
          essential = true;
          break;
        }
        essential = false;
        sum += ratio;
      }
      if (essential) continue;
      const double value = sum / std::pow(alive[si].energy, alpha);
      if (value <= 0.0) continue;
      // Ties break toward the lowest sensor id.
      if (best < 0 || value > best_value ||
          (value == best_value &&
           alive[si].id < alive[static_cast<std::size_t>(best)].id)) {
        best = static_cast<int>(si);
        best_value = value;
      }
    }
    if (best < 0) break;

    asleep[static_cast<std::size_t>(best)] = true;
    result.selections.push_back({alive[static_cast<std::size_t>(best)].id, best_value});
    for (int region : graph.regions_of(best)) {
      --degree[static_cast<std::size_t>(region)];
    }
  }

  for (std::size_t si = 0; si < n; ++si) {
    (asleep[si] ? result.asleep_ids : result.awake_ids).push_back(alive[si].id);
  }
  return result;
}

}  // namespace kcover
