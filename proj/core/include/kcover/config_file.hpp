#pragma once

#include <string>
#include <string_view>

#include "kcover/sim_config.hpp"

namespace kcover {

// Flat key-value run configuration: one `key = value` per line, `#` comments,
// optional `[section]` headers (organizational only). Every SimulationConfig
// field has a key of the same name; the topology and scheduler variants add
//   topology = grid | uniform
//   grid_rows, grid_cols, grid_spacing_m
//   uniform_n, uniform_width_m, uniform_height_m
//   scheduler = centralized | cgs | random   (+ p_sleep)
// and death_schedule lines repeat: `death_schedule = <node>,<period>,<phase>`
// with phase one of after_std | start_of_period.

SimulationConfig parse_config_text(std::string_view text,
                                   const std::string& name = "<config>");
SimulationConfig parse_config_file(const std::string& path);

/// Applies one `key = value` pair onto an existing config (used for CLI
/// overrides). Throws ConfigError on unknown keys or bad values.
void apply_config_entry(SimulationConfig& config, std::string_view key,
                        std::string_view value);

/// Round-trippable rendering of a config in the same key-value format.
std::string config_to_text(const SimulationConfig& config);

}  // namespace kcover
