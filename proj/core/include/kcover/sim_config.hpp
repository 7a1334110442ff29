#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcover/geometry.hpp"

namespace kcover {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

enum class TopologyKind { Grid, UniformRandom };

struct TopologySpec {
  TopologyKind kind = TopologyKind::Grid;
  // Grid
  int rows = 10;
  int cols = 10;
  double spacing_m = 10.0;
  // UniformRandom
  int count = 100;
  double width_m = 100.0;
  double height_m = 100.0;
};

enum class SchedulerKind { Centralized, Cgs, Random };

const char* to_string(SchedulerKind kind);

enum class FaultPhase { AfterStd, StartOfPeriod };

/// Scripted node failure. AfterStd is only meaningful under the CGS
/// scheduler: the node dies right after broadcasting its shout delay.
struct FaultEvent {
  int node_id = 0;
  int period = 0;
  FaultPhase phase = FaultPhase::StartOfPeriod;
};

/// The single source of run parameters. Identical configs (including seed)
/// produce bit-identical traces and message logs.
struct SimulationConfig {
  TopologySpec topology;
  int k = 3;
  double alpha = 2.0;
  double sensing_radius_m = 15.0;
  double comm_radius_m = 40.0;
  double initial_energy = 20.0;
  double awake_cost_per_period = 1.0;
  int max_periods = 40;
  SchedulerKind scheduler = SchedulerKind::Cgs;
  double p_sleep = 0.4;          // Random scheduler only
  double loss_probability = 0.0;
  double std_c = 1.0;            // shout delay coefficient, seconds
  double std_max = 10.0;         // shout delay clamp, seconds
  int template_resolution = 6;
  double template_tau = 0.86;
  double metric_sample_spacing_m = 1.0;
  double election_message_cost = 0.0;  // energy per broadcast, default free
  std::uint64_t seed = 1;
  std::vector<FaultEvent> death_schedule;

  /// Monitored area: the hull of the grid, or the uniform sampling rectangle.
  Rect target_area() const;

  /// Side of the global region cells; matches the local template cell size so
  /// the two discretizations align.
  double region_cell_side() const;

  /// Throws ConfigError on invalid parameters; returns human-readable
  /// warnings (e.g. a communication radius below twice the sensing radius).
  std::vector<std::string> validate() const;
};

}  // namespace kcover
