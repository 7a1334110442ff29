#include <doctest.h>

#include <set>

#include "kcover/metrics.hpp"
#include "kcover/rng.hpp"
#include "kcover/scheduler_centralized.hpp"
#include "test_support.hpp"

using namespace kcover;
using test_support::make_node;

TEST_CASE("coverage ratio scores over-coverage only") {
  CHECK(coverage_ratio(4, 3) == doctest::Approx(1.0));
  CHECK(coverage_ratio(3, 3) == doctest::Approx(-1.0));
  CHECK(coverage_ratio(6, 3) == doctest::Approx(1.0 / 3.0));
  CHECK(coverage_ratio(0, 1) == doctest::Approx(-1.0));
}

TEST_CASE("drowsiness combines energy and region scores") {
  const double r1[] = {1.0, 0.5};
  CHECK(drowsiness(1.0, 2.0, r1) == doctest::Approx(1.5));
  CHECK(drowsiness(2.0, 2.0, r1) == doctest::Approx(0.375));

  const double with_essential[] = {1.0, -1.0, 0.5};
  CHECK(drowsiness(1.0, 2.0, with_essential) == doctest::Approx(-1.0));
  CHECK(drowsiness(5.0, 1.0, std::span<const double>{}) == doctest::Approx(-1.0));
}

TEST_CASE("lower energy means strictly larger positive drowsiness") {
  SubstreamRng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const double ratios[] = {0.1 + rng.next_double(), 0.1 + rng.next_double()};
    const double e_low = 0.5 + 5.0 * rng.next_double();
    const double e_high = e_low + 0.5 + 5.0 * rng.next_double();
    const double alpha = 0.5 + 3.0 * rng.next_double();
    CHECK(drowsiness(e_low, alpha, ratios) > drowsiness(e_high, alpha, ratios));
  }
}

namespace {

// One shared region covered by all three sensors.
CoverageGraph single_region_graph(int sensors) {
  std::vector<int> ids;
  for (int i = 0; i < sensors; ++i) ids.push_back(i);
  CoverageGraph g(1, ids);
  for (int i = 0; i < sensors; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace

TEST_CASE("greedy puts redundant equal-energy sensors to sleep, lowest id first") {
  std::vector<SensorNode> nodes = {make_node(0, 0, 0), make_node(1, 0, 0),
                                   make_node(2, 0, 0)};
  for (auto& n : nodes) n.energy = 1.0;
  const SchedulePartition p =
      centralized_schedule(nodes, single_region_graph(3), 1, 2.0);

  REQUIRE(p.asleep_ids.size() == 2);
  CHECK(p.asleep_ids == std::vector<int>{0, 1});
  CHECK(p.awake_ids == std::vector<int>{2});
  REQUIRE(p.selections.size() == 2);
  CHECK(p.selections[0].sensor_id == 0);
  CHECK(p.selections[0].drowsiness == doctest::Approx(0.5));  // 1/(3-1)
  CHECK(p.selections[1].sensor_id == 1);
  CHECK(p.selections[1].drowsiness == doctest::Approx(1.0));  // 1/(2-1)
}

TEST_CASE("no over-coverage means nobody sleeps") {
  std::vector<SensorNode> nodes = {make_node(0, 0, 0), make_node(1, 0, 0),
                                   make_node(2, 0, 0)};
  const SchedulePartition p =
      centralized_schedule(nodes, single_region_graph(3), 3, 2.0);
  CHECK(p.asleep_ids.empty());
  CHECK(p.awake_ids.size() == 3);
}

namespace {

struct RandomInstance {
  std::vector<SensorNode> nodes;
  CoverageGraph graph;
};

// Deployments keep every sensor attached to at least one region the topology
// can actually k-cover; a sensor whose regions are all hopeless would sit
// awake forever without being needed by anything.
RandomInstance random_instance(SubstreamRng& rng, int max_nodes, int max_regions,
                               int k) {
  while (true) {
    RandomInstance inst;
    const int n = 3 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_nodes - 2)));
    const int regions = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_regions - 1)));
    std::vector<int> ids;
    for (int i = 0; i < n; ++i) {
      auto node = make_node(i, 0, 0);
      node.energy = 1.0 + 9.0 * rng.next_double();
      inst.nodes.push_back(node);
      ids.push_back(i);
    }
    inst.graph = CoverageGraph(static_cast<std::size_t>(regions), ids);
    for (int r = 0; r < regions; ++r) {
      for (int s = 0; s < n; ++s) {
        if (rng.next_double() < 0.45) inst.graph.add_edge(r, s);
      }
    }
    bool all_sensors_useful = true;
    for (int s = 0; s < n && all_sensors_useful; ++s) {
      bool has_feasible = false;
      for (int r : inst.graph.regions_of(s)) {
        if (inst.graph.region_degree(r) >= k) has_feasible = true;
      }
      all_sensors_useful = has_feasible;
    }
    if (all_sensors_useful) return inst;
  }
}

}  // namespace

TEST_CASE("greedy output is a valid, non-redundant cover on random instances") {
  SubstreamRng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(3));
    auto inst = random_instance(rng, 12, 10, k);
    const SchedulePartition p = centralized_schedule(inst.nodes, inst.graph, k, 2.0);

    const std::set<int> awake(p.awake_ids.begin(), p.awake_ids.end());
    CHECK(verify_k_cover(awake, inst.graph, k));
    CHECK(is_nonredundant(awake, inst.graph, k));

    // independent exhaustive oracle over all proper subsets
    const auto coverers = test_support::coverer_ids(inst.graph);
    CHECK(test_support::oracle_k_cover(awake, coverers, k));
    if (awake.size() <= 12) {
      CHECK(test_support::oracle_minimal(awake, coverers, k));
    }

    // every slept node had strictly positive drowsiness when selected
    for (const auto& sel : p.selections) CHECK(sel.drowsiness > 0.0);
  }
}

TEST_CASE("coverage preservation: regions at degree >= k keep k awake coverers") {
  SubstreamRng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(3));
    auto inst = random_instance(rng, 14, 12, k);
    const SchedulePartition p = centralized_schedule(inst.nodes, inst.graph, k, 2.0);
    const std::set<int> awake(p.awake_ids.begin(), p.awake_ids.end());
    for (std::size_t r = 0; r < inst.graph.region_count(); ++r) {
      const auto& coverers = inst.graph.sensors_covering(static_cast<int>(r));
      if (static_cast<int>(coverers.size()) < k) continue;
      int have = 0;
      for (int si : coverers) {
        if (awake.count(inst.graph.sensor_id(si)) > 0) ++have;
      }
      CHECK(have >= k);
    }
  }
}

TEST_CASE("selection order is independent of alpha when energies are equal") {
  SubstreamRng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = random_instance(rng, 10, 8, 1);
    for (auto& n : inst.nodes) n.energy = 4.0;
    const SchedulePartition a = centralized_schedule(inst.nodes, inst.graph, 1, 1.0);
    const SchedulePartition b = centralized_schedule(inst.nodes, inst.graph, 1, 3.0);
    REQUIRE(a.selections.size() == b.selections.size());
    for (std::size_t i = 0; i < a.selections.size(); ++i) {
      CHECK(a.selections[i].sensor_id == b.selections[i].sensor_id);
    }
  }
}
