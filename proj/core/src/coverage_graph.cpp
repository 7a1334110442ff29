#include "kcover/coverage_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kcover {

CoverageGraph build_coverage_graph(std::span<const SensorNode> nodes,
                                   const RegionGrid& grid, CoverageMode mode) {
  std::vector<int> ids;
  ids.reserve(nodes.size());
  for (const auto& n : nodes) ids.push_back(n.id);

  CoverageGraph graph(static_cast<std::size_t>(grid.cell_count()), std::move(ids));
  const double delta = grid.cell_side / 2.0;

  for (int region = 0; region < grid.cell_count(); ++region) {
    const Point2D center = grid.cell_center(region);
    for (std::size_t si = 0; si < nodes.size(); ++si) {
      const SensorNode& n = nodes[si];
      const bool covered =
          mode == CoverageMode::ExactCenter
              ? disk_covers_point(n.position, n.sensing_radius, center)
              : cell_covered_pessimistic(center, {0.0, 0.0}, n.position,
                                         n.sensing_radius, delta);
      if (covered) graph.add_edge(region, static_cast<int>(si));
    }
  }
  return graph;
}

RegionTemplate local_region_template(double sensing_radius, int resolution,
                                     double tau) {
  if (resolution < 2) {
    throw std::invalid_argument(
        "template resolution must be at least 2 cells across the disk");
  }
  if (sensing_radius <= 0.0) {
    throw std::invalid_argument("sensing radius must be positive");
  }

  RegionTemplate tmpl;
  tmpl.sensing_radius = sensing_radius;
  tmpl.delta = sensing_radius / resolution;
  tmpl.tau = tau;

  const double keep = tau * sensing_radius;
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      const Point2D offset{-sensing_radius + (2 * i + 1) * tmpl.delta,
                           -sensing_radius + (2 * j + 1) * tmpl.delta};
      if (offset.x * offset.x + offset.y * offset.y <= keep * keep) {
        tmpl.offsets.push_back(offset);
      }
    }
  }
  return tmpl;
}

double RegionTemplate::coverage_reach() const {
  return std::max(tau * sensing_radius,
                  sensing_radius - std::numbers::sqrt2 * delta);
}

bool covers_cell(const SensorNode& w, Point2D cell_center,
                 const RegionTemplate& tmpl) {
  const double tau_reach = tmpl.tau * w.sensing_radius;
  if (squared_distance(w.position, cell_center) <= tau_reach * tau_reach) {
    return true;
  }
  return cell_covered_pessimistic(cell_center, {0.0, 0.0}, w.position,
                                  w.sensing_radius, tmpl.delta);
}

std::vector<Point2D> node_region_cells(const SensorNode& s,
                                       const RegionTemplate& tmpl,
                                       const std::optional<Rect>& clip) {
  const Point2D anchor = clip ? Point2D{clip->min_x, clip->min_y} : Point2D{0.0, 0.0};
  const double side = tmpl.cell_side();
  const double reach = tmpl.coverage_reach();

  const int i_lo = static_cast<int>(std::floor((s.position.x - reach - anchor.x) / side));
  const int i_hi = static_cast<int>(std::ceil((s.position.x + reach - anchor.x) / side));
  const int j_lo = static_cast<int>(std::floor((s.position.y - reach - anchor.y) / side));
  const int j_hi = static_cast<int>(std::ceil((s.position.y + reach - anchor.y) / side));

  std::vector<Point2D> cells;
  for (int j = j_lo; j <= j_hi; ++j) {
    for (int i = i_lo; i <= i_hi; ++i) {
      const Point2D center{anchor.x + (i + 0.5) * side, anchor.y + (j + 0.5) * side};
      if (clip && !clip->contains(center)) continue;
      if (covers_cell(s, center, tmpl)) cells.push_back(center);
    }
  }
  return cells;
}

LocalCoverage local_subgraph(const SensorNode& s,
                             std::span<const SensorNode> neighbors,
                             const RegionTemplate& tmpl,
                             const std::optional<Rect>& clip) {
  LocalCoverage local;
  local.cell_centers = node_region_cells(s, tmpl, clip);

  std::vector<int> ids;
  ids.reserve(neighbors.size() + 1);
  ids.push_back(s.id);
  for (const auto& w : neighbors) ids.push_back(w.id);

  local.graph = CoverageGraph(local.cell_centers.size(), std::move(ids));
  for (std::size_t r = 0; r < local.cell_centers.size(); ++r) {
    const int region = static_cast<int>(r);
    local.graph.add_edge(region, 0);  // own cells, by construction
    for (std::size_t wi = 0; wi < neighbors.size(); ++wi) {
      if (covers_cell(neighbors[wi], local.cell_centers[r], tmpl)) {
        local.graph.add_edge(region, static_cast<int>(wi) + 1);
      }
    }
  }
  return local;
}

}  // namespace kcover
