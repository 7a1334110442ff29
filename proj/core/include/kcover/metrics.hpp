#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "kcover/coverage_graph.hpp"
#include "kcover/node.hpp"
#include "kcover/region_grid.hpp"

namespace kcover {

inline constexpr int kThetaColumns = 3;  // traces always report k = 1..3

/// One per-period record of the run. Coverage is measured on the awake set
/// after the election and before energy is drained.
struct MetricsRow {
  int period = 0;
  int alive = 0;
  int awake = 0;
  std::array<double, kThetaColumns> theta{};        // area-sampled
  std::array<double, kThetaColumns> theta_prime{};  // region-counted
  long long messages = 0;
};

struct MetricsTrace {
  std::vector<MetricsRow> rows;
};

/// Fraction of lattice sample points (spacing apart, cell-center style over
/// the area) covered by at least 1..max_k of the given nodes' closed sensing
/// disks. Index j holds the fraction for coverage j+1.
std::vector<double> sampled_coverage_fractions(std::span<const SensorNode> nodes,
                                               const Rect& area, double spacing,
                                               int max_k);

/// Area coverage ratio for a single k.
double theta_k(std::span<const SensorNode> nodes, const Rect& area,
               double spacing, int k);

/// Fraction of regions with degree >= k in the given graph. An empty graph
/// counts as zero coverage (with a warning on stderr).
double theta_prime_k(const CoverageGraph& graph, int k);

enum class LifetimeMode {
  Prefix,    // longest prefix with theta > lambda every period
  LastAbove  // last period with theta > lambda (non-monotone traces differ)
};

/// Operational periods with coverage strictly above lambda.
int k_lifetime(std::span<const double> theta_series, double lambda,
               LifetimeMode mode = LifetimeMode::Prefix);

/// Same over a trace's area-coverage column for the given k (1-based, <= 3).
int k_lifetime(const MetricsTrace& trace, int k, double lambda,
               LifetimeMode mode = LifetimeMode::Prefix);

/// Oracle: every region that could be k-covered by the alive set (degree >= k
/// in the graph) still has at least k awake coverers. Regions that the alive
/// topology cannot cover are exempt.
bool verify_k_cover(const std::set<int>& awake_ids, const CoverageGraph& alive_graph,
                    int k);

/// Oracle: the awake set is a non-redundant k-cover: removing any single
/// awake node breaks verify_k_cover. Throws std::invalid_argument when the
/// awake set is not a valid cover to begin with.
bool is_nonredundant(const std::set<int>& awake_ids, const CoverageGraph& alive_graph,
                     int k);

/// Ground-truth check of the distributed guarantee: for every alive node,
/// every in-area template cell that has at least k alive coverers (the node
/// itself plus pessimistically-covering alive neighbors) also has at least k
/// awake coverers. Uses full knowledge of the deployment, independent of any
/// node's partial view.
bool verify_local_k_cover(std::span<const SensorNode> nodes,
                          const RegionTemplate& tmpl,
                          const std::optional<Rect>& clip, int k);

}  // namespace kcover
