// kcover: k-coverage sleep-scheduling simulator front end.
//
// Subcommands:
//   run             one configuration -> trace CSV (and optional message log)
//   compare         scheduler x seed batch -> trace CSVs + summary
//   plot            trace CSVs -> self-contained SVG chart
//   verify          quick property/oracle suites on small instances
//   preset figure5  the canned 10x10-grid comparison experiment
//
// Exit codes: 0 success, 2 configuration errors, 3 I/O errors, 1 anything else.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "kcover/cgs.hpp"
#include "kcover/config_file.hpp"
#include "kcover/csv_io.hpp"
#include "kcover/experiment.hpp"
#include "kcover/metrics.hpp"
#include "kcover/rng.hpp"
#include "kcover/scheduler_centralized.hpp"
#include "kcover/sim_engine.hpp"
#include "kcover/svg_plot.hpp"
#include "kcover/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

std::string default_out_dir() {
  const char* env = std::getenv("KCOVER_OUT_DIR");
  return env && *env ? env : ".";
}

struct Overrides {
  std::vector<std::pair<std::string, std::string>> entries;

  void add_cli_options(CLI::App& cmd) {
    auto keyed = [this](std::string key) -> CLI::callback_t {
      return [this, key](const std::vector<std::string>& values) {
        for (const std::string& value : values) entries.emplace_back(key, value);
        return true;
      };
    };
    cmd.add_option("--seed", keyed("seed"), "Override the run seed");
    cmd.add_option("--k", keyed("k"), "Override the required coverage");
    cmd.add_option("--loss", keyed("loss_probability"),
                   "Override the message loss probability");
    cmd.add_option("--scheduler", keyed("scheduler"),
                   "Override the scheduler (centralized|cgs|random)");
    cmd.add_option("--p-sleep", keyed("p_sleep"),
                   "Override the random scheduler's sleep probability");
    cmd.add_option("--set", [this](const std::vector<std::string>& kvs) {
      for (const std::string& kv : kvs) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos) {
          throw CLI::ValidationError("--set expects key=value, got '" + kv + "'");
        }
        entries.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
      }
      return true;
    }, "Override any config key (key=value, repeatable)")->take_all();
  }

  void apply(kcover::SimulationConfig& config) const {
    for (const auto& [key, value] : entries) {
      kcover::apply_config_entry(config, key, value);
    }
  }
};

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    const std::size_t dots = item.find("..");
    if (dots != std::string::npos) {
      const std::uint64_t lo = std::stoull(item.substr(0, dots));
      const std::uint64_t hi = std::stoull(item.substr(dots + 2));
      for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      seeds.push_back(std::stoull(item));
    }
    if (end == text.size()) break;
  }
  if (seeds.empty()) throw kcover::ConfigError("no seeds given");
  return seeds;
}

std::vector<kcover::SchedulerChoice> parse_schedulers(const std::string& text) {
  std::vector<kcover::SchedulerChoice> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    start = end + 1;
    if (!item.empty()) {
      if (item == "cgs") {
        out.push_back({kcover::SchedulerKind::Cgs, 0.0});
      } else if (item == "centralized") {
        out.push_back({kcover::SchedulerKind::Centralized, 0.0});
      } else if (item.rfind("random:", 0) == 0) {
        out.push_back({kcover::SchedulerKind::Random, std::stod(item.substr(7))});
      } else {
        throw kcover::ConfigError("unknown scheduler '" + item +
                                  "' (use cgs, centralized or random:<p>)");
      }
    }
    if (end == text.size()) break;
  }
  if (out.empty()) throw kcover::ConfigError("no schedulers given");
  return out;
}

int cmd_run(const std::string& config_path, const Overrides& overrides,
            const std::string& out_path, const std::string& messages_path) {
  kcover::SimulationConfig config;
  if (!config_path.empty()) config = kcover::parse_config_file(config_path);
  overrides.apply(config);

  const kcover::SimulationResult result = kcover::run_simulation(config);
  kcover::write_file(out_path, kcover::trace_to_csv(result.trace));
  std::printf("wrote %s (%zu rows)\n", out_path.c_str(), result.trace.rows.size());
  if (!messages_path.empty()) {
    kcover::write_file(messages_path, kcover::messages_to_csv(result.messages));
    std::printf("wrote %s (%zu messages)\n", messages_path.c_str(),
                result.messages.size());
  }
  return kExitOk;
}

int cmd_compare(const std::string& config_path, const Overrides& overrides,
                const std::string& schedulers, const std::string& seeds,
                const std::string& out_dir) {
  kcover::ExperimentSpec spec;
  if (!config_path.empty()) spec.base = kcover::parse_config_file(config_path);
  overrides.apply(spec.base);
  spec.schedulers = parse_schedulers(schedulers);
  spec.seeds = parse_seeds(seeds);
  spec.out_dir = out_dir;

  const kcover::ExperimentResult result = kcover::run_experiment(spec);
  std::printf("wrote %zu trace files, %s and %s\n", result.trace_files.size(),
              result.summary_file.c_str(), result.lifetime_file.c_str());
  return kExitOk;
}

int cmd_plot(const std::vector<std::string>& csvs, const std::string& column,
             std::vector<int> ks, const std::string& out_path) {
  kcover::PlotColumn col;
  if (column == "theta") col = kcover::PlotColumn::Theta;
  else if (column == "theta-prime") col = kcover::PlotColumn::ThetaPrime;
  else if (column == "awake") col = kcover::PlotColumn::Awake;
  else throw kcover::ConfigError("column must be theta, theta-prime or awake");
  if (ks.empty()) ks = {1, 2, 3};
  kcover::plot_traces(csvs, ks, col, out_path);
  std::printf("wrote %s\n", out_path.c_str());
  return kExitOk;
}

int cmd_preset_figure5(const std::string& out_dir, const std::string& seeds) {
  kcover::ExperimentSpec spec = kcover::figure5_preset(
      out_dir, seeds.empty() ? std::vector<std::uint64_t>{} : parse_seeds(seeds));
  const kcover::ExperimentResult result = kcover::run_experiment(spec);

  // one panel per scheduler, first-seed traces, matching the reference figures
  std::vector<std::string> first_seed;
  for (const kcover::SchedulerChoice& choice : spec.schedulers) {
    first_seed.push_back(spec.out_dir + "/" + choice.label() + "_seed" +
                         std::to_string(spec.seeds.front()) + ".csv");
  }
  const std::vector<int> ks = {1, 2, 3};
  kcover::plot_traces(first_seed, ks, kcover::PlotColumn::ThetaPrime,
                      out_dir + "/figure5.svg");
  kcover::plot_traces(first_seed, ks, kcover::PlotColumn::Awake,
                      out_dir + "/figure6.svg");

  std::printf("wrote %zu trace files, summary, lifetimes, figure5.svg, figure6.svg in %s\n",
              result.trace_files.size(), out_dir.c_str());
  return kExitOk;
}

// Quick self-checks over small instances: the distributed coverage guarantee,
// the centralized oracle pair, estimator agreement and determinism.
int cmd_verify(int trials) {
  using namespace kcover;
  int failures = 0;
  auto report = [&](const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %s: %s\n", ok ? "ok" : "FAIL", name, detail.c_str());
    if (!ok) ++failures;
  };

  {  // distributed elections keep feasible cells covered, under loss
    const RegionTemplate tmpl = local_region_template(15.0, 6, 0.86);
    SubstreamRng pick(2024);
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
      TopologySpec spec;
      spec.kind = TopologyKind::UniformRandom;
      spec.count = 20 + static_cast<int>(pick.next_below(50));
      spec.width_m = 80;
      spec.height_m = 80;
      auto nodes = generate_topology(spec, 300 + static_cast<std::uint64_t>(t),
                                     15.0, 40.0, 20.0);
      const Rect area{0, 0, 80, 80};
      const double loss = 0.3 * pick.next_double();
      const int k = 1 + static_cast<int>(pick.next_below(3));
      DeliveryFn deliver = [&](int mi, const SensorNode& sender,
                               std::span<const SensorNode> all) {
        SubstreamRng rng(900 + static_cast<std::uint64_t>(t), kStreamLoss, 1,
                         static_cast<std::uint64_t>(mi));
        return broadcast(sender, all, loss, rng);
      };
      const ElectionResult r =
          run_election(nodes, tmpl, area, {k, 2.0, 1.0, 10.0}, deliver);
      for (auto& n : nodes) {
        const auto it = r.decisions.find(n.id);
        if (it != r.decisions.end()) {
          n.state = it->second == SleepDecision::Sleep ? NodeState::Asleep
                                                       : NodeState::Awake;
        }
      }
      if (!verify_local_k_cover(nodes, tmpl, area, k)) ++violations;
    }
    report("cgs coverage guarantee", violations == 0,
           std::to_string(trials) + " elections, " + std::to_string(violations) +
               " violations");
  }

  {  // centralized scheduler: valid and non-redundant covers
    SubstreamRng pick(4048);
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
      const int k = 1 + static_cast<int>(pick.next_below(3));
      const RegionGrid grid = RegionGrid::over_area({0, 0, 30, 30}, 5.0);
      std::vector<SensorNode> nodes;
      CoverageGraph graph;
      while (true) {
        nodes.clear();
        const int n = 5 + static_cast<int>(pick.next_below(11));
        for (int i = 0; i < n; ++i) {
          SensorNode node;
          node.id = i;
          node.position = {30.0 * pick.next_double(), 30.0 * pick.next_double()};
          node.sensing_radius = 8.0 + 10.0 * pick.next_double();
          node.energy = 1.0 + 19.0 * pick.next_double();
          nodes.push_back(node);
        }
        graph = build_coverage_graph(nodes, grid, CoverageMode::ExactCenter);
        bool all_useful = true;
        for (std::size_t s = 0; s < nodes.size() && all_useful; ++s) {
          bool feasible = false;
          for (int r : graph.regions_of(static_cast<int>(s))) {
            if (graph.region_degree(r) >= k) feasible = true;
          }
          all_useful = feasible;
        }
        if (all_useful) break;
      }
      const SchedulePartition p = centralized_schedule(nodes, graph, k, 2.0);
      const std::set<int> awake(p.awake_ids.begin(), p.awake_ids.end());
      if (!verify_k_cover(awake, graph, k) || !is_nonredundant(awake, graph, k)) {
        ++violations;
      }
    }
    report("centralized cover minimality", violations == 0,
           std::to_string(trials) + " instances, " + std::to_string(violations) +
               " violations");
  }

  {  // area and region estimators agree
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      TopologySpec spec;
      spec.kind = TopologyKind::UniformRandom;
      spec.count = 30;
      spec.width_m = 80;
      spec.height_m = 80;
      const auto nodes = generate_topology(spec, 50 + static_cast<std::uint64_t>(t),
                                           15.0, 40.0, 20.0);
      const Rect area{0, 0, 80, 80};
      const CoverageGraph graph = build_coverage_graph(
          nodes, RegionGrid::over_area(area, 5.0), CoverageMode::ExactCenter);
      for (int k = 1; k <= 3; ++k) {
        worst = std::max(worst, std::abs(theta_prime_k(graph, k) -
                                         theta_k(nodes, area, 1.0, k)));
      }
    }
    report("estimator agreement", worst <= 0.1,
           "max |theta' - theta| = " + std::to_string(worst));
  }

  {  // determinism
    SimulationConfig config;
    config.topology.kind = TopologyKind::UniformRandom;
    config.topology.count = 40;
    config.scheduler = SchedulerKind::Cgs;
    config.k = 2;
    config.loss_probability = 0.15;
    config.max_periods = 10;
    config.seed = 31;
    const std::string a = trace_to_csv(run_simulation(config).trace);
    const std::string b = trace_to_csv(run_simulation(config).trace);
    report("determinism", a == b, a == b ? "repeat runs byte-identical"
                                         : "traces differ");
  }

  return failures == 0 ? kExitOk : kExitOther;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-coverage sleep-scheduling simulator"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run one simulation to a trace CSV");
  std::string run_config, run_out, run_messages;
  Overrides run_overrides;
  run->add_option("--config,-c", run_config, "Config file (key = value lines)");
  run->add_option("--out,-o", run_out, "Trace CSV path");
  run->add_option("--messages,-m", run_messages, "Also write the message log CSV");
  run_overrides.add_cli_options(*run);

  // compare
  auto* compare = app.add_subcommand("compare", "Run a scheduler x seed batch");
  std::string cmp_config, cmp_schedulers = "cgs,random:0.4,random:0.25";
  std::string cmp_seeds = "1..5", cmp_out_dir;
  Overrides cmp_overrides;
  compare->add_option("--config,-c", cmp_config, "Base config file");
  compare->add_option("--schedulers", cmp_schedulers,
                      "Comma list: cgs, centralized, random:<p>");
  compare->add_option("--seeds", cmp_seeds, "Comma list and ranges, e.g. 1,2,5..8");
  compare->add_option("--out-dir,-d", cmp_out_dir, "Output directory");
  cmp_overrides.add_cli_options(*compare);

  // plot
  auto* plot = app.add_subcommand("plot", "Render trace CSVs to an SVG chart");
  std::vector<std::string> plot_csvs;
  std::string plot_column = "theta", plot_out;
  std::vector<int> plot_ks;
  plot->add_option("csvs", plot_csvs, "Trace CSV files (one panel each)")->required();
  plot->add_option("--column", plot_column, "theta | theta-prime | awake");
  plot->add_option("--k", plot_ks, "Coverage levels to draw (default 1 2 3)");
  plot->add_option("--out,-o", plot_out, "SVG output path");

  // verify
  auto* verify = app.add_subcommand("verify", "Run property suites on small instances");
  int verify_trials = 25;
  verify->add_option("--trials", verify_trials, "Instances per suite");

  // preset
  auto* preset = app.add_subcommand("preset", "Run a canned experiment");
  std::string preset_name, preset_out_dir, preset_seeds;
  preset->add_option("name", preset_name, "Preset name (figure5)")->required();
  preset->add_option("--out-dir,-d", preset_out_dir, "Output directory");
  preset->add_option("--seeds", preset_seeds, "Seed list (default 1..20)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      if (run_out.empty()) run_out = default_out_dir() + "/trace.csv";
      return cmd_run(run_config, run_overrides, run_out, run_messages);
    }
    if (*compare) {
      if (cmp_out_dir.empty()) cmp_out_dir = default_out_dir();
      return cmd_compare(cmp_config, cmp_overrides, cmp_schedulers, cmp_seeds,
                         cmp_out_dir);
    }
    if (*plot) {
      if (plot_out.empty()) plot_out = default_out_dir() + "/chart.svg";
      return cmd_plot(plot_csvs, plot_column, plot_ks, plot_out);
    }
    if (*verify) return cmd_verify(verify_trials);
    if (*preset) {
      if (preset_name != "figure5") {
        throw kcover::ConfigError("unknown preset '" + preset_name + "'");
      }
      if (preset_out_dir.empty()) preset_out_dir = default_out_dir() + "/figure5";
      return cmd_preset_figure5(preset_out_dir, preset_seeds);
    }
  } catch (const kcover::ConfigError& e) {
    std::fprintf(stderr, "kcover: config error: %s\n", e.what());
    return kExitConfig;
  } catch (const kcover::CsvParseError& e) {
    std::fprintf(stderr, "kcover: %s\n", e.what());
    return kExitIo;
  } catch (const kcover::IoError& e) {
    std::fprintf(stderr, "kcover: i/o error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "kcover: %s\n", e.what());
    return kExitOther;
  }
  return kExitOk;
}
