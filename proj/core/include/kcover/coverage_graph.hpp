#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kcover/geometry.hpp"
#include "kcover/node.hpp"
#include "kcover/region_grid.hpp"

namespace kcover {

/// Bipartite region-sensor adjacency. Regions are indices 0..region_count-1;
/// sensors are addressed by their position in sensor_ids(). Both directions of
/// every edge are stored, so degree queries are O(1) either way.
class CoverageGraph {
 public:
  CoverageGraph() = default;
  CoverageGraph(std::size_t region_count, std::vector<int> sensor_ids)
      : sensor_ids_(std::move(sensor_ids)),
        region_to_sensors_(region_count),
        sensor_to_regions_(sensor_ids_.size()) {}

  void add_edge(int region, int sensor_index) {
    region_to_sensors_[static_cast<std::size_t>(region)].push_back(sensor_index);
    sensor_to_regions_[static_cast<std::size_t>(sensor_index)].push_back(region);
  }

  std::size_t region_count() const { return region_to_sensors_.size(); }
  std::size_t sensor_count() const { return sensor_ids_.size(); }
  const std::vector<int>& sensor_ids() const { return sensor_ids_; }
  int sensor_id(int sensor_index) const {
    return sensor_ids_[static_cast<std::size_t>(sensor_index)];
  }

  /// Sensor indices covering a region; its size is the region degree c_r.
  const std::vector<int>& sensors_covering(int region) const {
    return region_to_sensors_[static_cast<std::size_t>(region)];
  }

  const std::vector<int>& regions_of(int sensor_index) const {
    return sensor_to_regions_[static_cast<std::size_t>(sensor_index)];
  }

  int region_degree(int region) const {
    return static_cast<int>(sensors_covering(region).size());
  }

 private:
  std::vector<int> sensor_ids_;
  std::vector<std::vector<int>> region_to_sensors_;
  std::vector<std::vector<int>> sensor_to_regions_;
};

enum class CoverageMode {
  ExactCenter,  // edge iff the cell center lies in the closed sensing disk
  Pessimistic   // edge iff the whole cell provably lies in the disk
};

/// Global coverage graph of grid cells vs. the given nodes. Callers filter
/// the node list (alive, awake, ...) as needed; an empty list yields a valid
/// graph with every region degree zero.
CoverageGraph build_coverage_graph(std::span<const SensorNode> nodes,
                                   const RegionGrid& grid, CoverageMode mode);

/// Square-cell approximation of one sensing disk. The offsets describe the
/// covered cells relative to a node sitting on a lattice corner; tau is the
/// center-inclusion factor that generated them.
struct RegionTemplate {
  double sensing_radius = 0.0;
  double delta = 0.0;  // half-side of one cell
  double tau = 0.0;
  std::vector<Point2D> offsets;

  double cell_side() const { return 2.0 * delta; }

  /// Farthest center distance at which a node still covers a cell.
  double coverage_reach() const;
};

/// Builds the cell approximation of a sensing disk: a resolution x resolution
/// lattice over the disk's bounding box, keeping cells whose centers lie
/// within tau * R of the node. The defaults (resolution 6, tau 0.86) give the
/// familiar 24-cell layout; finer resolutions track the disk more closely.
RegionTemplate local_region_template(double sensing_radius, int resolution,
                                     double tau = 0.86);

/// One coverage relation shared by every node: w covers a cell when the cell
/// center lies within tau * R (the template inclusion rule) or the strict
/// square-in-disk margin holds. Symmetry matters: every node that can stand
/// in for a cell also carries that cell among its own regions, which is what
/// lets the distributed election keep its coverage guarantee.
bool covers_cell(const SensorNode& w, Point2D cell_center,
                 const RegionTemplate& tmpl);

/// The cells a node is responsible for: cells of the shared lattice (side
/// 2*delta, anchored at the clip origin, or (0,0) without one) that the node
/// covers, restricted to the monitored area when clip is given. On
/// lattice-aligned deployments this reproduces the template offsets exactly.
std::vector<Point2D> node_region_cells(const SensorNode& s,
                                       const RegionTemplate& tmpl,
                                       const std::optional<Rect>& clip);

/// A node's local view: its lattice cells plus which of the given neighbors
/// cover each of them under the shared relation.
struct LocalCoverage {
  std::vector<Point2D> cell_centers;  // absolute positions
  CoverageGraph graph;                // sensor 0 is the node itself
};

LocalCoverage local_subgraph(const SensorNode& s,
                             std::span<const SensorNode> neighbors,
                             const RegionTemplate& tmpl,
                             const std::optional<Rect>& clip = std::nullopt);

}  // namespace kcover
