#include "kcover/config_file.hpp"

#include <charconv>
#include <cstdio>
#include <vector>

#include "kcover/csv_io.hpp"

namespace kcover {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double to_double(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(value), &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + std::string(key) + "': expected a number, got '" +
                      std::string(value) + "'");
  }
}

long long to_int(std::string_view key, std::string_view value) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("key '" + std::string(key) + "': expected an integer, got '" +
                      std::string(value) + "'");
  }
  return v;
}

FaultEvent parse_death(std::string_view value) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = value.find(',', start);
    if (pos == std::string_view::npos) {
      parts.push_back(trim(value.substr(start)));
      break;
    }
    parts.push_back(trim(value.substr(start, pos - start)));
    start = pos + 1;
  }
  if (parts.size() != 3) {
    throw ConfigError("death_schedule entries are '<node>,<period>,<phase>', got '" +
                      std::string(value) + "'");
  }
  FaultEvent f;
  f.node_id = static_cast<int>(to_int("death_schedule", parts[0]));
  f.period = static_cast<int>(to_int("death_schedule", parts[1]));
  if (parts[2] == "after_std") {
    f.phase = FaultPhase::AfterStd;
  } else if (parts[2] == "start_of_period") {
    f.phase = FaultPhase::StartOfPeriod;
  } else {
    throw ConfigError("death_schedule phase must be after_std or start_of_period");
  }
  return f;
}

}  // namespace

void apply_config_entry(SimulationConfig& config, std::string_view key,
                        std::string_view value) {
  if (key == "topology") {
    if (value == "grid") config.topology.kind = TopologyKind::Grid;
    else if (value == "uniform") config.topology.kind = TopologyKind::UniformRandom;
    else throw ConfigError("topology must be grid or uniform, got '" + std::string(value) + "'");
  } else if (key == "grid_rows") {
    config.topology.rows = static_cast<int>(to_int(key, value));
  } else if (key == "grid_cols") {
    config.topology.cols = static_cast<int>(to_int(key, value));
  } else if (key == "grid_spacing_m") {
    config.topology.spacing_m = to_double(key, value);
  } else if (key == "uniform_n") {
    config.topology.count = static_cast<int>(to_int(key, value));
  } else if (key == "uniform_width_m") {
    config.topology.width_m = to_double(key, value);
  } else if (key == "uniform_height_m") {
    config.topology.height_m = to_double(key, value);
  } else if (key == "k") {
    config.k = static_cast<int>(to_int(key, value));
  } else if (key == "alpha") {
    config.alpha = to_double(key, value);
  } else if (key == "sensing_radius_m") {
    config.sensing_radius_m = to_double(key, value);
  } else if (key == "comm_radius_m") {
    config.comm_radius_m = to_double(key, value);
  } else if (key == "initial_energy") {
    config.initial_energy = to_double(key, value);
  } else if (key == "awake_cost_per_period") {
    config.awake_cost_per_period = to_double(key, value);
  } else if (key == "max_periods") {
    config.max_periods = static_cast<int>(to_int(key, value));
  } else if (key == "scheduler") {
    if (value == "centralized") config.scheduler = SchedulerKind::Centralized;
    else if (value == "cgs") config.scheduler = SchedulerKind::Cgs;
    else if (value == "random") config.scheduler = SchedulerKind::Random;
    else throw ConfigError("scheduler must be centralized, cgs or random");
  } else if (key == "p_sleep") {
    config.p_sleep = to_double(key, value);
  } else if (key == "loss_probability") {
    config.loss_probability = to_double(key, value);
  } else if (key == "std_c") {
    config.std_c = to_double(key, value);
  } else if (key == "std_max") {
    config.std_max = to_double(key, value);
  } else if (key == "template_resolution") {
    config.template_resolution = static_cast<int>(to_int(key, value));
  } else if (key == "template_tau") {
    config.template_tau = to_double(key, value);
  } else if (key == "metric_sample_spacing_m") {
    config.metric_sample_spacing_m = to_double(key, value);
  } else if (key == "election_message_cost") {
    config.election_message_cost = to_double(key, value);
  } else if (key == "seed") {
    config.seed = static_cast<std::uint64_t>(to_int(key, value));
  } else if (key == "death_schedule") {
    config.death_schedule.push_back(parse_death(value));
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

SimulationConfig parse_config_text(std::string_view text, const std::string& name) {
  SimulationConfig config;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (end == text.size() && line.empty()) break;
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[' && line.back() == ']') continue;  // section header
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(name + ":" + std::to_string(line_no) +
                        ": expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    try {
      apply_config_entry(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

SimulationConfig parse_config_file(const std::string& path) {
  return parse_config_text(read_file(path), path);
}

std::string config_to_text(const SimulationConfig& config) {
  std::string out;
  auto num = [](double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };

  out += "[topology]\n";
  if (config.topology.kind == TopologyKind::Grid) {
    out += "topology = grid\n";
    out += "grid_rows = " + std::to_string(config.topology.rows) + "\n";
    out += "grid_cols = " + std::to_string(config.topology.cols) + "\n";
    out += "grid_spacing_m = " + num(config.topology.spacing_m) + "\n";
  } else {
    out += "topology = uniform\n";
    out += "uniform_n = " + std::to_string(config.topology.count) + "\n";
    out += "uniform_width_m = " + num(config.topology.width_m) + "\n";
    out += "uniform_height_m = " + num(config.topology.height_m) + "\n";
  }

  out += "\n[coverage]\n";
  out += "k = " + std::to_string(config.k) + "\n";
  out += "alpha = " + num(config.alpha) + "\n";
  out += "sensing_radius_m = " + num(config.sensing_radius_m) + "\n";
  out += "comm_radius_m = " + num(config.comm_radius_m) + "\n";
  out += "template_resolution = " + std::to_string(config.template_resolution) + "\n";
  out += "template_tau = " + num(config.template_tau) + "\n";

  out += "\n[energy]\n";
  out += "initial_energy = " + num(config.initial_energy) + "\n";
  out += "awake_cost_per_period = " + num(config.awake_cost_per_period) + "\n";
  out += "election_message_cost = " + num(config.election_message_cost) + "\n";

  out += "\n[schedule]\n";
  out += std::string("scheduler = ") + to_string(config.scheduler) + "\n";
  out += "p_sleep = " + num(config.p_sleep) + "\n";
  out += "std_c = " + num(config.std_c) + "\n";
  out += "std_max = " + num(config.std_max) + "\n";

  out += "\n[run]\n";
  out += "max_periods = " + std::to_string(config.max_periods) + "\n";
  out += "loss_probability = " + num(config.loss_probability) + "\n";
  out += "metric_sample_spacing_m = " + num(config.metric_sample_spacing_m) + "\n";
  out += "seed = " + std::to_string(config.seed) + "\n";
  for (const FaultEvent& f : config.death_schedule) {
    out += "death_schedule = " + std::to_string(f.node_id) + "," +
           std::to_string(f.period) + "," +
           (f.phase == FaultPhase::AfterStd ? "after_std" : "start_of_period") + "\n";
  }
  return out;
}

}  // namespace kcover
