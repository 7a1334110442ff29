#include "kcover/experiment.hpp"

#include <cstdio>
#include <filesystem>

#include "kcover/csv_io.hpp"
#include "kcover/metrics.hpp"
#include "kcover/sim_engine.hpp"

namespace kcover {

namespace {

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string SchedulerChoice::label() const {
  switch (kind) {
    case SchedulerKind::Centralized: return "centralized";
    case SchedulerKind::Cgs: return "cgs";
    case SchedulerKind::Random: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "random_p%.2f", p_sleep);
      return buf;
    }
  }
  return "?";
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  if (spec.schedulers.empty()) throw ConfigError("experiment needs at least one scheduler");
  if (spec.seeds.empty()) throw ConfigError("experiment needs at least one seed");
  spec.base.validate();

  std::error_code ec;
  std::filesystem::create_directories(spec.out_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + spec.out_dir + "'");

  ExperimentResult result;
  std::string summary = "scheduler,period,mean_alive,mean_awake"
                        ",mean_theta1,mean_theta2,mean_theta3"
                        ",mean_theta_p1,mean_theta_p2,mean_theta_p3\n";
  std::string lifetimes = "scheduler,seed,k,lambda,k_lifetime\n";

  for (const SchedulerChoice& choice : spec.schedulers) {
    std::vector<MetricsTrace> traces;
    traces.reserve(spec.seeds.size());

    for (std::uint64_t seed : spec.seeds) {
      SimulationConfig config = spec.base;
      config.scheduler = choice.kind;
      if (choice.kind == SchedulerKind::Random) config.p_sleep = choice.p_sleep;
      config.seed = seed;

      const SimulationResult run = run_simulation(config);
      const std::string path = spec.out_dir + "/" + choice.label() + "_seed" +
                               std::to_string(seed) + ".csv";
      write_file(path, trace_to_csv(run.trace));
      result.trace_files.push_back(path);

      for (double lambda : spec.lifetime_lambdas) {
        for (int k = 1; k <= kThetaColumns; ++k) {
          lifetimes += choice.label() + "," + std::to_string(seed) + "," +
                       std::to_string(k) + "," + fixed6(lambda) + "," +
                       std::to_string(k_lifetime(run.trace, k, lambda)) + "\n";
        }
      }
      traces.push_back(run.trace);
    }

    const std::size_t periods = traces.front().rows.size();
    for (std::size_t p = 0; p < periods; ++p) {
      double alive = 0.0, awake = 0.0;
      std::array<double, kThetaColumns> theta{}, theta_prime{};
      for (const MetricsTrace& t : traces) {
        alive += t.rows[p].alive;
        awake += t.rows[p].awake;
        for (int k = 0; k < kThetaColumns; ++k) {
          theta[static_cast<std::size_t>(k)] += t.rows[p].theta[static_cast<std::size_t>(k)];
          theta_prime[static_cast<std::size_t>(k)] +=
              t.rows[p].theta_prime[static_cast<std::size_t>(k)];
        }
      }
      const double n = static_cast<double>(traces.size());
      summary += choice.label() + "," + std::to_string(p + 1) + "," +
                 fixed6(alive / n) + "," + fixed6(awake / n);
      for (int k = 0; k < kThetaColumns; ++k) {
        summary += "," + fixed6(theta[static_cast<std::size_t>(k)] / n);
      }
      for (int k = 0; k < kThetaColumns; ++k) {
        summary += "," + fixed6(theta_prime[static_cast<std::size_t>(k)] / n);
      }
      summary += "\n";
    }
  }

  result.summary_file = spec.out_dir + "/summary.csv";
  result.lifetime_file = spec.out_dir + "/lifetimes.csv";
  write_file(result.summary_file, summary);
  write_file(result.lifetime_file, lifetimes);
  return result;
}

ExperimentSpec figure5_preset(const std::string& out_dir,
                              std::vector<std::uint64_t> seeds) {
  ExperimentSpec spec;
  spec.base.topology = {TopologyKind::Grid, 10, 10, 10.0, 100, 100.0, 100.0};
  spec.base.k = 3;
  spec.base.alpha = 2.0;
  spec.base.sensing_radius_m = 15.0;
  spec.base.comm_radius_m = 40.0;
  spec.base.initial_energy = 20.0;
  spec.base.awake_cost_per_period = 1.0;
  spec.base.max_periods = 60;
  spec.base.loss_probability = 0.0;
  spec.base.template_resolution = 6;
  spec.base.template_tau = 0.98;
  spec.base.metric_sample_spacing_m = 1.0;

  spec.schedulers = {{SchedulerKind::Cgs, 0.0},
                     {SchedulerKind::Random, 0.40},
                     {SchedulerKind::Random, 0.25}};
  spec.seeds = std::move(seeds);
  if (spec.seeds.empty()) {
    for (std::uint64_t s = 1; s <= 20; ++s) spec.seeds.push_back(s);
  }
  spec.out_dir = out_dir;
  spec.lifetime_lambdas = {0.8, 0.9, 0.99};
  return spec;
}

}  // namespace kcover
