#include <doctest.h>

#include <set>

#include "kcover/metrics.hpp"
#include "kcover/rng.hpp"
#include "kcover/topology.hpp"
#include "test_support.hpp"

using namespace kcover;
using test_support::make_node;

TEST_CASE("theta_k trivial covers") {
  const Rect area{0, 0, 90, 90};
  CHECK(theta_k({}, area, 1.0, 1) == doctest::Approx(0.0));
  CHECK(theta_k({}, area, 1.0, 3) == doctest::Approx(0.0));

  const auto big = std::vector<SensorNode>{make_node(0, 45, 45, 200.0)};
  CHECK(theta_k(big, area, 1.0, 1) == doctest::Approx(1.0));
}

TEST_CASE("the full grid 3-covers the whole hull area") {
  const auto nodes =
      generate_topology({TopologyKind::Grid, 10, 10, 10.0, 0, 0, 0}, 1, 15.0, 40.0, 20.0);
  const Rect area{0, 0, 90, 90};
  CHECK(theta_k(nodes, area, 1.0, 3) == doctest::Approx(1.0));
}

TEST_CASE("sampled fractions match a direct per-point recount") {
  SubstreamRng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<SensorNode> nodes;
    const int n = 5 + static_cast<int>(rng.next_below(15));
    for (int i = 0; i < n; ++i) {
      nodes.push_back(make_node(i, 80.0 * rng.next_double(), 80.0 * rng.next_double(),
                                8.0 + 10.0 * rng.next_double()));
    }
    const Rect area{0, 0, 80, 80};
    const double spacing = 2.0;
    const auto fractions = sampled_coverage_fractions(nodes, area, spacing, 3);

    // independent recount without binning
    long long counts[3] = {0, 0, 0};
    const int cells = 40;
    for (int j = 0; j < cells; ++j) {
      for (int i = 0; i < cells; ++i) {
        const Point2D p{(i + 0.5) * spacing, (j + 0.5) * spacing};
        int c = 0;
        for (const auto& nnode : nodes) {
          if (test_support::dist(p, nnode.position) <= nnode.sensing_radius) ++c;
        }
        for (int k = 0; k < 3; ++k) {
          if (c >= k + 1) ++counts[k];
        }
      }
    }
    for (int k = 0; k < 3; ++k) {
      CHECK(fractions[static_cast<std::size_t>(k)] ==
            doctest::Approx(counts[k] / 1600.0));
    }
  }
}

TEST_CASE("theta fractions never increase with k") {
  SubstreamRng rng(32);
  std::vector<SensorNode> nodes;
  for (int i = 0; i < 25; ++i) {
    nodes.push_back(make_node(i, 70.0 * rng.next_double(), 70.0 * rng.next_double()));
  }
  const auto f = sampled_coverage_fractions(nodes, {0, 0, 70, 70}, 1.0, 3);
  CHECK(f[0] >= f[1]);
  CHECK(f[1] >= f[2]);
}

TEST_CASE("coverage fractions are monotone in the node set") {
  SubstreamRng rng(34);
  const Rect area{0, 0, 70, 70};
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<SensorNode> superset;
    for (int i = 0; i < 20; ++i) {
      superset.push_back(
          make_node(i, 70.0 * rng.next_double(), 70.0 * rng.next_double()));
    }
    std::vector<SensorNode> subset;
    for (const auto& n : superset) {
      if (rng.next_double() < 0.5) subset.push_back(n);
    }
    const auto f_small = sampled_coverage_fractions(subset, area, 2.0, 3);
    const auto f_big = sampled_coverage_fractions(superset, area, 2.0, 3);
    for (int k = 0; k < 3; ++k) {
      CHECK(f_small[static_cast<std::size_t>(k)] <= f_big[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("theta_prime counts covered regions") {
  CoverageGraph g(4, {0, 1, 2});
  // regions 0,1 at degree 2, regions 2,3 at degree 1
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 2);
  CHECK(theta_prime_k(g, 1) == doctest::Approx(1.0));
  CHECK(theta_prime_k(g, 2) == doctest::Approx(0.5));
  CHECK(theta_prime_k(g, 3) == doctest::Approx(0.0));
  CHECK(theta_prime_k(CoverageGraph(0, {}), 1) == doctest::Approx(0.0));
}

TEST_CASE("region and area estimators coincide on matching lattices") {
  SubstreamRng rng(33);
  TopologySpec spec;
  spec.kind = TopologyKind::UniformRandom;
  spec.count = 20;
  spec.width_m = 80;
  spec.height_m = 80;
  const auto nodes = generate_topology(spec, 77, 15.0, 40.0, 20.0);
  const Rect area{0, 0, 80, 80};
  const RegionGrid grid = RegionGrid::over_area(area, 5.0);
  const CoverageGraph g = build_coverage_graph(nodes, grid, CoverageMode::ExactCenter);
  for (int k = 1; k <= 3; ++k) {
    CHECK(theta_prime_k(g, k) == doctest::Approx(theta_k(nodes, area, 5.0, k)));
  }
}

TEST_CASE("k-lifetime reads the contiguous prefix") {
  std::vector<double> series;
  for (int i = 0; i < 26; ++i) series.push_back(1.0);
  for (int i = 0; i < 10; ++i) series.push_back(0.9 - 0.05 * i);
  CHECK(k_lifetime(series, 0.99) == 26);
  CHECK(k_lifetime(series, 0.85) == 27);

  const std::vector<double> constant(10, 0.8);
  CHECK(k_lifetime(constant, 0.8) == 0);  // strict inequality

  const std::vector<double> dip = {1.0, 0.5, 1.0, 1.0};
  CHECK(k_lifetime(dip, 0.9) == 1);
  CHECK(k_lifetime(dip, 0.9, LifetimeMode::LastAbove) == 4);

  CHECK_THROWS_AS(k_lifetime(std::span<const double>{}, 0.9), std::invalid_argument);

  MetricsTrace trace;
  for (int p = 1; p <= 30; ++p) {
    MetricsRow row;
    row.period = p;
    row.theta = {1.0, 1.0, p <= 26 ? 1.0 : 0.5};
    trace.rows.push_back(row);
  }
  CHECK(k_lifetime(trace, 3, 0.99) == 26);
  CHECK(k_lifetime(trace, 1, 0.99) == 30);
  CHECK_THROWS_AS(k_lifetime(trace, 4, 0.99), std::invalid_argument);
}

TEST_CASE("verify_k_cover flags uncovered feasible regions only") {
  CoverageGraph g(2, {0, 1, 2});
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);  // region 1 has a single possible coverer

  CHECK(verify_k_cover({0, 1, 2}, g, 1));       // awake = alive
  CHECK(verify_k_cover({0, 2}, g, 1));
  CHECK_FALSE(verify_k_cover({0, 1}, g, 1));    // region 1's only coverer sleeps
  CHECK(verify_k_cover({0, 1}, g, 2));          // region 1 infeasible at k=2
}

TEST_CASE("non-redundancy via single removals") {
  CoverageGraph g(2, {0, 1, 2});
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  g.add_edge(1, 2);

  CHECK_FALSE(is_nonredundant({0, 1, 2}, g, 1));  // node 0 or 2 removable
  CHECK(is_nonredundant({0, 2}, g, 1));
  CHECK(is_nonredundant({1}, g, 1));
  CHECK_THROWS_AS(is_nonredundant({0}, g, 1), std::invalid_argument);
}
