#include "kcover/sim_engine.hpp"

#include <algorithm>
#include <cstdio>

#include "kcover/scheduler_centralized.hpp"
#include "kcover/scheduler_random.hpp"
#include "kcover/topology.hpp"

namespace kcover {

std::vector<int> broadcast(const SensorNode& sender,
                           std::span<const SensorNode> nodes,
                           double loss_probability, SubstreamRng& rng) {
  std::vector<const SensorNode*> candidates;
  for (const SensorNode& n : nodes) {
    if (!n.alive() || n.id == sender.id) continue;
    if (distance(sender.position, n.position) <= sender.comm_radius) {
      candidates.push_back(&n);
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const SensorNode* a, const SensorNode* b) { return a->id < b->id; });

  std::vector<int> receivers;
  for (const SensorNode* n : candidates) {
    if (rng.next_double() < 1.0 - loss_probability) receivers.push_back(n->id);
  }
  return receivers;
}

namespace {

// Nodes are kept sorted by id; ids are unique but need not be contiguous.
std::size_t id_index(const std::vector<SensorNode>& nodes, int id) {
  const auto it = std::lower_bound(
      nodes.begin(), nodes.end(), id,
      [](const SensorNode& n, int value) { return n.id < value; });
  return static_cast<std::size_t>(it - nodes.begin());
}

MetricsRow measure_period(int period, std::span<const SensorNode> nodes,
                          const Rect& area, const RegionGrid& grid,
                          double sample_spacing, long long messages) {
  MetricsRow row;
  row.period = period;
  row.messages = messages;

  std::vector<SensorNode> awake;
  for (const SensorNode& n : nodes) {
    if (n.alive()) ++row.alive;
    if (n.awake()) awake.push_back(n);
  }
  row.awake = static_cast<int>(awake.size());

  const auto fractions =
      sampled_coverage_fractions(awake, area, sample_spacing, kThetaColumns);
  const CoverageGraph awake_graph =
      build_coverage_graph(awake, grid, CoverageMode::ExactCenter);
  for (int k = 1; k <= kThetaColumns; ++k) {
    row.theta[static_cast<std::size_t>(k - 1)] = fractions[static_cast<std::size_t>(k - 1)];
    row.theta_prime[static_cast<std::size_t>(k - 1)] = theta_prime_k(awake_graph, k);
  }
  return row;
}

}  // namespace

SimulationResult run_simulation(const SimulationConfig& config,
                                const PeriodObserver& observer) {
  return run_simulation(config,
                        generate_topology(config.topology, config.seed,
                                          config.sensing_radius_m,
                                          config.comm_radius_m,
                                          config.initial_energy),
                        observer);
}

SimulationResult run_simulation(const SimulationConfig& config,
                                std::vector<SensorNode> nodes,
                                const PeriodObserver& observer) {
  SimulationResult result;
  result.warnings = config.validate();
  for (const std::string& w : result.warnings) {
    std::fprintf(stderr, "kcover: warning: %s\n", w.c_str());
  }

  std::sort(nodes.begin(), nodes.end(),
            [](const SensorNode& a, const SensorNode& b) { return a.id < b.id; });

  const Rect area = config.target_area();
  const RegionGrid grid = RegionGrid::over_area(area, config.region_cell_side());
  const RegionTemplate tmpl = local_region_template(
      config.sensing_radius_m, config.template_resolution, config.template_tau);

  for (int period = 1; period <= config.max_periods; ++period) {
    // Scripted whole-period failures happen before anything else.
    for (const FaultEvent& f : config.death_schedule) {
      if (f.period == period && f.phase == FaultPhase::StartOfPeriod) {
        for (SensorNode& n : nodes) {
          if (n.id == f.node_id) n.state = NodeState::Dead;
        }
      }
    }

    // A node without energy for one more awake period is dead.
    for (SensorNode& n : nodes) {
      if (n.alive() && n.energy < config.awake_cost_per_period) {
        n.state = NodeState::Dead;
      }
    }

    bool any_alive = false;
    for (SensorNode& n : nodes) {
      if (n.alive()) {
        n.state = NodeState::Awake;  // wake everyone for the election
        any_alive = true;
      }
    }

    long long period_messages = 0;
    if (any_alive) {
      switch (config.scheduler) {
        case SchedulerKind::Centralized: {
          std::vector<SensorNode> alive;
          for (const SensorNode& n : nodes) {
            if (n.alive()) alive.push_back(n);
          }
          const CoverageGraph graph =
              build_coverage_graph(alive, grid, CoverageMode::ExactCenter);
          const SchedulePartition partition =
              centralized_schedule(alive, graph, config.k, config.alpha);
          for (int id : partition.asleep_ids) {
            nodes[id_index(nodes, id)].state = NodeState::Asleep;
          }
          break;
        }
        case SchedulerKind::Cgs: {
          std::vector<int> after_std;
          for (const FaultEvent& f : config.death_schedule) {
            if (f.period == period && f.phase == FaultPhase::AfterStd) {
              after_std.push_back(f.node_id);
            }
          }
          DeliveryFn deliver = [&](int message_index, const SensorNode& sender,
                                   std::span<const SensorNode> all) {
            SubstreamRng rng(config.seed, kStreamLoss,
                             static_cast<std::uint64_t>(period),
                             static_cast<std::uint64_t>(message_index));
            return broadcast(sender, all, config.loss_probability, rng);
          };
          ElectionParams params{config.k, config.alpha, config.std_c,
                                config.std_max};
          const ElectionResult election = run_election(
              nodes, tmpl, area, params, deliver, after_std, period);

          for (const auto& [id, decision] : election.decisions) {
            nodes[id_index(nodes, id)].state =
                decision == SleepDecision::Sleep ? NodeState::Asleep
                                                 : NodeState::Awake;
          }
          for (int id : election.died_after_std) {
            nodes[id_index(nodes, id)].state = NodeState::Dead;
          }
          if (config.election_message_cost > 0.0) {
            for (const auto& [id, sent] : election.sent_counts) {
              SensorNode& n = nodes[id_index(nodes, id)];
              n.energy = std::max(0.0, n.energy - sent * config.election_message_cost);
            }
          }
          period_messages = static_cast<long long>(election.messages.size());
          result.messages.insert(result.messages.end(),
                                 election.messages.begin(),
                                 election.messages.end());
          break;
        }
        case SchedulerKind::Random: {
          for (SensorNode& n : nodes) {
            if (!n.alive()) continue;
            SubstreamRng rng(config.seed, kStreamSleep,
                             static_cast<std::uint64_t>(n.id),
                             static_cast<std::uint64_t>(period));
            if (decide_random({config.p_sleep}, rng.next_double()) ==
                SleepDecision::Sleep) {
              n.state = NodeState::Asleep;
            }
          }
          break;
        }
      }
    }

    result.trace.rows.push_back(measure_period(
        period, nodes, area, grid, config.metric_sample_spacing_m, period_messages));
    if (observer) observer(period, nodes);

    for (SensorNode& n : nodes) {
      if (n.awake()) n.energy -= config.awake_cost_per_period;
    }
  }

  result.final_nodes = std::move(nodes);
  return result;
}

}  // namespace kcover
