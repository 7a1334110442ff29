#include <doctest.h>

#include <map>

#include "kcover/csv_io.hpp"
#include "kcover/sim_engine.hpp"
#include "kcover/topology.hpp"
#include "test_support.hpp"

using namespace kcover;
using test_support::make_node;

TEST_CASE("broadcast delivers to in-range alive nodes, subject to loss") {
  const auto nodes =
      generate_topology({TopologyKind::Grid, 10, 10, 10.0, 0, 0, 0}, 1, 15.0, 40.0, 20.0);
  const SensorNode& center = nodes[44];  // (40, 40)

  SUBCASE("lossless delivery reaches every candidate") {
    SubstreamRng rng(1);
    const auto receivers = broadcast(center, nodes, 0.0, rng);
    // brute-force candidate count
    int expected = 0;
    for (const auto& n : nodes) {
      if (n.id != center.id &&
          test_support::dist(n.position, center.position) <= 40.0) {
        ++expected;
      }
    }
    CHECK(static_cast<int>(receivers.size()) == expected);
    CHECK(expected >= 44);
  }
  SUBCASE("total loss delivers nothing") {
    SubstreamRng rng(1);
    CHECK(broadcast(center, nodes, 1.0, rng).empty());
  }
  SUBCASE("dead nodes never receive") {
    auto copy = nodes;
    for (auto& n : copy) {
      if (n.id != center.id) n.state = NodeState::Dead;
    }
    SubstreamRng rng(1);
    CHECK(broadcast(center, copy, 0.0, rng).empty());
  }
}

TEST_CASE("max_periods zero gives an empty trace") {
  SimulationConfig config;
  config.max_periods = 0;
  config.k = 1;
  CHECK(run_simulation(config).trace.rows.empty());
}

TEST_CASE("always-awake network dies exactly when the energy runs out") {
  SimulationConfig config;
  config.topology = {TopologyKind::Grid, 5, 5, 10.0, 0, 0, 0};
  config.scheduler = SchedulerKind::Random;
  config.p_sleep = 0.0;  // everyone stays awake
  config.k = 1;
  config.initial_energy = 20.0;
  config.awake_cost_per_period = 1.0;
  config.max_periods = 25;
  const SimulationResult result = run_simulation(config);

  REQUIRE(result.trace.rows.size() == 25);
  for (int p = 1; p <= 20; ++p) {
    const auto& row = result.trace.rows[static_cast<std::size_t>(p - 1)];
    CHECK(row.alive == 25);
    CHECK(row.awake == 25);
    CHECK(row.theta[0] == doctest::Approx(1.0));
  }
  for (int p = 21; p <= 25; ++p) {
    const auto& row = result.trace.rows[static_cast<std::size_t>(p - 1)];
    CHECK(row.alive == 0);
    CHECK(row.awake == 0);
    CHECK(row.theta[0] == doctest::Approx(0.0));
    CHECK(row.theta_prime[0] == doctest::Approx(0.0));
  }
}

TEST_CASE("energy is conserved and dead nodes never act") {
  SimulationConfig config;
  config.topology = {TopologyKind::Grid, 6, 6, 10.0, 0, 0, 0};
  config.scheduler = SchedulerKind::Cgs;
  config.k = 2;
  config.max_periods = 30;
  config.loss_probability = 0.1;
  config.seed = 4;

  std::map<int, double> previous_energy;
  long long awake_periods = 0;
  bool ever_negative = false;
  bool dead_acted = false;

  const SimulationResult result = run_simulation(
      config, [&](int, std::span<const SensorNode> nodes) {
        for (const auto& n : nodes) {
          if (n.awake()) ++awake_periods;
          if (n.energy < 0.0) ever_negative = true;
          if (!n.alive() && n.awake()) dead_acted = true;
          auto it = previous_energy.find(n.id);
          if (it != previous_energy.end() && n.energy > it->second + 1e-12) {
            ever_negative = true;  // energy increased
          }
          previous_energy[n.id] = n.energy;
        }
      });

  CHECK_FALSE(ever_negative);
  CHECK_FALSE(dead_acted);

  double spent = 0.0;
  for (const auto& n : result.final_nodes) spent += 20.0 - n.energy;
  CHECK(spent == doctest::Approx(static_cast<double>(awake_periods) *
                                 config.awake_cost_per_period));

  // dead nodes never appear as message senders
  for (const auto& row : result.trace.rows) CHECK(row.awake <= row.alive);
}

TEST_CASE("identical configs give byte-identical traces and logs") {
  SimulationConfig config;
  config.topology.kind = TopologyKind::UniformRandom;
  config.topology.count = 40;
  config.topology.width_m = 70;
  config.topology.height_m = 70;
  config.scheduler = SchedulerKind::Cgs;
  config.k = 2;
  config.loss_probability = 0.2;
  config.max_periods = 15;
  config.seed = 1234;

  const SimulationResult a = run_simulation(config);
  const SimulationResult b = run_simulation(config);
  CHECK(trace_to_csv(a.trace) == trace_to_csv(b.trace));
  CHECK(messages_to_csv(a.messages) == messages_to_csv(b.messages));
}

TEST_CASE("loss draws do not perturb topology or random-sleep decisions") {
  SimulationConfig config;
  config.topology.kind = TopologyKind::UniformRandom;
  config.topology.count = 50;
  config.topology.width_m = 80;
  config.topology.height_m = 80;
  config.scheduler = SchedulerKind::Random;
  config.p_sleep = 0.3;
  config.k = 1;
  config.max_periods = 12;
  config.seed = 99;

  SimulationConfig lossy = config;
  lossy.loss_probability = 0.7;

  const SimulationResult a = run_simulation(config);
  const SimulationResult b = run_simulation(lossy);
  CHECK(trace_to_csv(a.trace) == trace_to_csv(b.trace));

  const auto na = generate_topology(config.topology, config.seed, 15, 40, 20);
  const auto nb = generate_topology(lossy.topology, lossy.seed, 15, 40, 20);
  REQUIRE(na.size() == nb.size());
  for (std::size_t i = 0; i < na.size(); ++i) {
    CHECK(na[i].position.x == nb[i].position.x);
    CHECK(na[i].position.y == nb[i].position.y);
  }
}

TEST_CASE("scripted start-of-period faults kill nodes before the election") {
  SimulationConfig config;
  config.topology = {TopologyKind::Grid, 3, 3, 10.0, 0, 0, 0};
  config.scheduler = SchedulerKind::Random;
  config.p_sleep = 0.0;
  config.k = 1;
  config.max_periods = 5;
  config.death_schedule = {{4, 3, FaultPhase::StartOfPeriod}};

  const SimulationResult result = run_simulation(config);
  CHECK(result.trace.rows[1].alive == 9);
  CHECK(result.trace.rows[2].alive == 8);
  CHECK(result.trace.rows[4].alive == 8);
}

TEST_CASE("a scripted post-delay death silences the node mid-election") {
  // node 1 mirrors node 0 a meter away; the pair covers the same lattice cells
  std::vector<SensorNode> nodes = {make_node(0, 0, 0), make_node(1, 1, 0)};
  SimulationConfig config;
  config.topology.kind = TopologyKind::UniformRandom;  // ignored: explicit nodes
  config.topology.count = 2;
  config.topology.width_m = 50.0;
  config.topology.height_m = 50.0;
  config.scheduler = SchedulerKind::Cgs;
  config.k = 1;
  config.template_resolution = 4;
  config.template_tau = 0.4;
  config.max_periods = 2;
  config.death_schedule = {{1, 1, FaultPhase::AfterStd}};

  const SimulationResult result = run_simulation(config, nodes);

  // the dying node broadcast hello and delay, then vanished
  int sent_by_1 = 0;
  bool awake_from_1 = false;
  for (const auto& m : result.messages) {
    if (m.period == 1 && m.sender == 1) {
      ++sent_by_1;
      if (m.kind == CgsMessageKind::Awake) awake_from_1 = true;
    }
  }
  CHECK(sent_by_1 == 2);
  CHECK_FALSE(awake_from_1);

  // node 0 slept on the promise; node 1 is gone from period 1 onward
  CHECK(result.trace.rows[0].alive == 1);
  CHECK(result.trace.rows[0].awake == 0);
  CHECK(result.trace.rows[1].alive == 1);
  CHECK(result.trace.rows[1].awake == 1);  // alone now, must stay up
  for (const auto& n : result.final_nodes) {
    if (n.id == 1) CHECK(n.state == NodeState::Dead);
  }
}

TEST_CASE("invalid configs are rejected before any period runs") {
  SimulationConfig config;
  config.k = 0;
  CHECK_THROWS_AS(run_simulation(config), ConfigError);

  SimulationConfig bad_loss;
  bad_loss.loss_probability = 1.5;
  CHECK_THROWS_AS(run_simulation(bad_loss), ConfigError);
}

TEST_CASE("a short communication radius draws a warning") {
  SimulationConfig config;
  config.comm_radius_m = 20.0;  // below twice the sensing radius
  config.max_periods = 0;
  const auto warnings = config.validate();
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("twice the sensing radius") != std::string::npos);
  CHECK(SimulationConfig{}.validate().empty());
}
