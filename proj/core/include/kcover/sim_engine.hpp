#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kcover/cgs.hpp"
#include "kcover/metrics.hpp"
#include "kcover/node.hpp"
#include "kcover/rng.hpp"
#include "kcover/sim_config.hpp"

namespace kcover {

/// Lossy single-hop broadcast: candidates are the alive nodes within the
/// sender's communication radius (sender excluded); each receives
/// independently with probability 1 - loss_probability, drawing from the
/// given substream in ascending id order.
std::vector<int> broadcast(const SensorNode& sender,
                           std::span<const SensorNode> nodes,
                           double loss_probability, SubstreamRng& rng);

struct SimulationResult {
  MetricsTrace trace;
  std::vector<MessageRecord> messages;
  std::vector<SensorNode> final_nodes;
  std::vector<std::string> warnings;
};

/// Called once per period with the post-election, pre-drain node states,
/// the same instant the metrics row is recorded.
using PeriodObserver = std::function<void(int period, std::span<const SensorNode>)>;

/// Runs the full period loop: apply scripted start-of-period faults, retire
/// nodes without energy for the period, wake everyone, run the configured
/// scheduler's election, record metrics, then drain the awake nodes. The
/// trace always has max_periods rows; periods after the network dies are
/// recorded as zero-coverage rows.
SimulationResult run_simulation(const SimulationConfig& config,
                                const PeriodObserver& observer = {});

/// Same loop over an explicit deployment (config.topology is ignored).
SimulationResult run_simulation(const SimulationConfig& config,
                                std::vector<SensorNode> nodes,
                                const PeriodObserver& observer = {});

}  // namespace kcover
