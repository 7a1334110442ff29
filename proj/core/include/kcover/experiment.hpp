#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcover/sim_config.hpp"

namespace kcover {

/// One scheduler column of a comparison run.
struct SchedulerChoice {
  SchedulerKind kind = SchedulerKind::Cgs;
  double p_sleep = 0.0;  // Random only

  /// Stable file-name label, e.g. "cgs", "random_p0.40".
  std::string label() const;
};

/// A batch of runs: every scheduler crossed with every seed, one trace CSV
/// each, plus per-scheduler summary curves and lifetimes.
struct ExperimentSpec {
  SimulationConfig base;
  std::vector<SchedulerChoice> schedulers;
  std::vector<std::uint64_t> seeds;
  std::string out_dir;
  std::vector<double> lifetime_lambdas = {0.9};
};

struct ExperimentResult {
  std::vector<std::string> trace_files;
  std::string summary_file;
  std::string lifetime_file;
};

/// Runs the batch and writes:
///   <out_dir>/<label>_seed<seed>.csv     one trace per (scheduler, seed)
///   <out_dir>/summary.csv                per-scheduler mean metrics per period
///   <out_dir>/lifetimes.csv              k-lifetimes per (scheduler, seed, k, lambda)
/// Identical specs produce byte-identical files.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// The canned grid comparison: 10x10 grid at 10 m spacing, sensing 15 m,
/// communication 40 m, 20 energy units at 1 unit per awake period, k = 3,
/// alpha = 2, comparing CGS against random sleeping at p 0.4 and 0.25.
ExperimentSpec figure5_preset(const std::string& out_dir,
                              std::vector<std::uint64_t> seeds = {});

}  // namespace kcover
