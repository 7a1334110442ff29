#include "kcover/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace kcover {

namespace {

int lattice_count(double extent, double spacing) {
  return std::max(1, static_cast<int>(std::ceil(extent / spacing - 1e-9)));
}

// Coarse spatial bins so each sample point only tests nearby nodes. Bin side
// equals the largest sensing radius, so covering nodes are always within the
// 3x3 bin neighborhood of a point.
struct NodeBins {
  double bin_side = 1.0;
  int cols = 1;
  int rows = 1;
  Point2D origin;
  std::vector<std::vector<const SensorNode*>> bins;

  NodeBins(std::span<const SensorNode> nodes, const Rect& area) {
    double max_r = 0.0;
    for (const auto& n : nodes) max_r = std::max(max_r, n.sensing_radius);
    // correctness needs bin_side >= max_r; the extent terms keep the bin
    // count bounded for tiny radii or empty node sets
    bin_side = std::max({max_r, area.width() / 64.0, area.height() / 64.0, 1e-6});
    origin = {area.min_x - bin_side, area.min_y - bin_side};
    const double w = area.width() + 2.0 * bin_side;
    const double h = area.height() + 2.0 * bin_side;
    cols = lattice_count(w, bin_side) + 1;
    rows = lattice_count(h, bin_side) + 1;
    bins.resize(static_cast<std::size_t>(cols) * rows);
    for (const auto& n : nodes) {
      const int bx = clamp_col(static_cast<int>((n.position.x - origin.x) / bin_side));
      const int by = clamp_row(static_cast<int>((n.position.y - origin.y) / bin_side));
      bins[static_cast<std::size_t>(by) * cols + bx].push_back(&n);
    }
  }

  int clamp_col(int c) const { return std::clamp(c, 0, cols - 1); }
  int clamp_row(int r) const { return std::clamp(r, 0, rows - 1); }

  int coverage_at(Point2D p, int saturate) const {
    const int bx = clamp_col(static_cast<int>((p.x - origin.x) / bin_side));
    const int by = clamp_row(static_cast<int>((p.y - origin.y) / bin_side));
    int count = 0;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int cx = bx + dx;
        const int cy = by + dy;
        if (cx < 0 || cx >= cols || cy < 0 || cy >= rows) continue;
        for (const SensorNode* n : bins[static_cast<std::size_t>(cy) * cols + cx]) {
          if (disk_covers_point(n->position, n->sensing_radius, p)) {
            if (++count >= saturate) return count;
          }
        }
      }
    }
    return count;
  }
};

}  // namespace

std::vector<double> sampled_coverage_fractions(std::span<const SensorNode> nodes,
                                               const Rect& area, double spacing,
                                               int max_k) {
  if (spacing <= 0.0) throw std::invalid_argument("sample spacing must be positive");
  if (max_k < 1) throw std::invalid_argument("max_k must be >= 1");

  const int nx = lattice_count(area.width(), spacing);
  const int ny = lattice_count(area.height(), spacing);
  const long long total = static_cast<long long>(nx) * ny;

  std::vector<long long> at_least(static_cast<std::size_t>(max_k), 0);
  NodeBins bins(nodes, area);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Point2D p{area.min_x + (i + 0.5) * spacing,
                      area.min_y + (j + 0.5) * spacing};
      const int c = bins.coverage_at(p, max_k);
      for (int k = 1; k <= c; ++k) ++at_least[static_cast<std::size_t>(k - 1)];
    }
  }

  std::vector<double> fractions(static_cast<std::size_t>(max_k));
  for (int k = 0; k < max_k; ++k) {
    fractions[static_cast<std::size_t>(k)] =
        static_cast<double>(at_least[static_cast<std::size_t>(k)]) /
        static_cast<double>(total);
  }
  return fractions;
}

double theta_k(std::span<const SensorNode> nodes, const Rect& area,
               double spacing, int k) {
  return sampled_coverage_fractions(nodes, area, spacing, k)[static_cast<std::size_t>(k - 1)];
}

double theta_prime_k(const CoverageGraph& graph, int k) {
  const std::size_t total = graph.region_count();
  if (total == 0) {
    std::fprintf(stderr, "kcover: theta_prime_k over an empty region set is 0\n");
    return 0.0;
  }
  std::size_t covered = 0;
  for (std::size_t r = 0; r < total; ++r) {
    if (graph.region_degree(static_cast<int>(r)) >= k) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(total);
}

int k_lifetime(std::span<const double> theta_series, double lambda,
               LifetimeMode mode) {
  if (theta_series.empty()) throw std::invalid_argument("empty trace");
  if (mode == LifetimeMode::Prefix) {
    int t = 0;
    for (double theta : theta_series) {
      if (theta > lambda) ++t;
      else break;
    }
    return t;
  }
  int last = 0;
  for (std::size_t i = 0; i < theta_series.size(); ++i) {
    if (theta_series[i] > lambda) last = static_cast<int>(i) + 1;
  }
  return last;
}

int k_lifetime(const MetricsTrace& trace, int k, double lambda,
               LifetimeMode mode) {
  if (k < 1 || k > kThetaColumns) {
    throw std::invalid_argument("trace lifetimes support k in 1..3");
  }
  std::vector<double> series;
  series.reserve(trace.rows.size());
  for (const MetricsRow& row : trace.rows) {
    series.push_back(row.theta[static_cast<std::size_t>(k - 1)]);
  }
  return k_lifetime(series, lambda, mode);
}

bool verify_k_cover(const std::set<int>& awake_ids,
                    const CoverageGraph& alive_graph, int k) {
  for (std::size_t r = 0; r < alive_graph.region_count(); ++r) {
    const auto& coverers = alive_graph.sensors_covering(static_cast<int>(r));
    if (static_cast<int>(coverers.size()) < k) continue;  // infeasible region
    int awake = 0;
    for (int sensor_index : coverers) {
      if (awake_ids.count(alive_graph.sensor_id(sensor_index)) > 0) ++awake;
    }
    if (awake < k) return false;
  }
  return true;
}

bool is_nonredundant(const std::set<int>& awake_ids,
                     const CoverageGraph& alive_graph, int k) {
  if (!verify_k_cover(awake_ids, alive_graph, k)) {
    throw std::invalid_argument("awake set is not a valid k-cover");
  }
  for (int id : awake_ids) {
    std::set<int> without = awake_ids;
    without.erase(id);
    if (verify_k_cover(without, alive_graph, k)) return false;
  }
  return true;
}

bool verify_local_k_cover(std::span<const SensorNode> nodes,
                          const RegionTemplate& tmpl,
                          const std::optional<Rect>& clip, int k) {
  for (const SensorNode& s : nodes) {
    if (!s.alive()) continue;
    for (const Point2D& cell : node_region_cells(s, tmpl, clip)) {
      int alive_coverers = 0;
      int awake_coverers = 0;
      for (const SensorNode& w : nodes) {
        if (!w.alive() || !covers_cell(w, cell, tmpl)) continue;
        ++alive_coverers;
        if (w.awake()) ++awake_coverers;
      }
      if (alive_coverers >= k && awake_coverers < k) return false;
    }
  }
  return true;
}

}  // namespace kcover
