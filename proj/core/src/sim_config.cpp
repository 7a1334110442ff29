#include "kcover/sim_config.hpp"

#include <cmath>

namespace kcover {

const char* to_string(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::Centralized: return "centralized";
    case SchedulerKind::Cgs: return "cgs";
    case SchedulerKind::Random: return "random";
  }
  return "?";
}

Rect SimulationConfig::target_area() const {
  if (topology.kind == TopologyKind::Grid) {
    return {0.0, 0.0, (topology.cols - 1) * topology.spacing_m,
            (topology.rows - 1) * topology.spacing_m};
  }
  return {0.0, 0.0, topology.width_m, topology.height_m};
}

double SimulationConfig::region_cell_side() const {
  return 2.0 * sensing_radius_m / template_resolution;
}

std::vector<std::string> SimulationConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };

  if (topology.kind == TopologyKind::Grid) {
    if (topology.rows < 1 || topology.cols < 1) fail("grid dimensions must be positive");
    if (topology.spacing_m <= 0.0) fail("grid spacing must be positive");
  } else {
    if (topology.count < 1) fail("node count must be positive");
    if (topology.width_m <= 0.0 || topology.height_m <= 0.0) {
      fail("deployment area dimensions must be positive");
    }
  }
  if (k < 1) fail("required coverage k must be >= 1");
  if (alpha <= 0.0) fail("alpha must be positive");
  if (sensing_radius_m <= 0.0) fail("sensing radius must be positive");
  if (comm_radius_m <= 0.0) fail("communication radius must be positive");
  if (initial_energy < 0.0) fail("initial energy must be non-negative");
  if (awake_cost_per_period <= 0.0) fail("awake cost per period must be positive");
  if (max_periods < 0) fail("max periods must be non-negative");
  if (scheduler == SchedulerKind::Random && (p_sleep < 0.0 || p_sleep > 1.0)) {
    fail("p_sleep must lie in [0, 1]");
  }
  if (loss_probability < 0.0 || loss_probability > 1.0) {
    fail("loss probability must lie in [0, 1]");
  }
  if (std_c <= 0.0 || std_max <= 0.0) fail("shout delay parameters must be positive");
  if (template_resolution < 2) fail("template resolution must be >= 2");
  if (template_tau <= 0.0) fail("template tau must be positive");
  if (metric_sample_spacing_m <= 0.0) fail("metric sample spacing must be positive");
  if (election_message_cost < 0.0) fail("election message cost must be non-negative");
  for (const FaultEvent& f : death_schedule) {
    if (f.period < 1) fail("death schedule periods are 1-based");
  }

  std::vector<std::string> warnings;
  if (comm_radius_m < 2.0 * sensing_radius_m) {
    warnings.push_back(
        "communication radius " + std::to_string(comm_radius_m) +
        " m is below twice the sensing radius " + std::to_string(sensing_radius_m) +
        " m; network-wide connectivity is no longer implied by coverage");
  }
  if (scheduler != SchedulerKind::Cgs) {
    for (const FaultEvent& f : death_schedule) {
      if (f.phase == FaultPhase::AfterStd) {
        warnings.push_back(
            "after_std deaths only take effect under the cgs scheduler");
        break;
      }
    }
  }
  return warnings;
}

}  // namespace kcover
