#pragma once

#include <span>
#include <vector>

#include "kcover/coverage_graph.hpp"
#include "kcover/node.hpp"

namespace kcover {

/// Region score against the required coverage k: 1 / (c_r - k) when the
/// region is strictly over-covered, -1 otherwise (every covering sensor is
/// then essential).
double coverage_ratio(int region_degree, int k);

/// Sleep priority of a node: (1 / E^alpha) * sum of the ratios of the regions
/// it covers, or -1 when any of those regions is not over-covered (or the
/// node covers no region at all). Lower energy means higher priority.
double drowsiness(double energy, double alpha,
                  std::span<const double> adjacent_ratios);

struct SleepSelection {
  int sensor_id;
  double drowsiness;  // value at selection time, always > 0
};

struct SchedulePartition {
  std::vector<int> awake_ids;
  std::vector<int> asleep_ids;
  std::vector<SleepSelection> selections;  // greedy order
};

/// Greedy scheduler over a global coverage graph: repeatedly sends the node
/// with the largest positive drowsiness to sleep (ties to the lowest id),
/// removing its edges, until no node has positive drowsiness. Every region
/// that started with degree >= k keeps at least k awake coverers.
///
/// `graph` must be built over exactly the nodes in `alive`, in order.
SchedulePartition centralized_schedule(std::span<const SensorNode> alive,
                                       const CoverageGraph& graph, int k,
                                       double alpha);

}  // namespace kcover
