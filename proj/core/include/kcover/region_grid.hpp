#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kcover/geometry.hpp"

namespace kcover {

/// Regular lattice of square regions tiling a target area. Cell (i, j) is
/// centered at origin + ((i + 0.5) * side, (j + 0.5) * side); the lattice is
/// large enough to cover the whole area (the last row/column may overhang).
struct RegionGrid {
  Point2D origin;
  double cell_side = 0.0;
  int n_cols = 0;
  int n_rows = 0;

  static RegionGrid over_area(const Rect& area, double cell_side) {
    if (cell_side <= 0.0) throw std::invalid_argument("cell_side must be positive");
    RegionGrid g;
    g.origin = {area.min_x, area.min_y};
    g.cell_side = cell_side;
    g.n_cols = std::max(1, static_cast<int>(std::ceil(area.width() / cell_side - 1e-9)));
    g.n_rows = std::max(1, static_cast<int>(std::ceil(area.height() / cell_side - 1e-9)));
    return g;
  }

  int cell_count() const { return n_cols * n_rows; }

  /// Row-major cell center lookup.
  Point2D cell_center(int index) const {
    const int j = index / n_cols;
    const int i = index % n_cols;
    return {origin.x + (i + 0.5) * cell_side, origin.y + (j + 0.5) * cell_side};
  }

  std::vector<Point2D> centers() const {
    std::vector<Point2D> out;
    out.reserve(static_cast<std::size_t>(cell_count()));
    for (int idx = 0; idx < cell_count(); ++idx) out.push_back(cell_center(idx));
    return out;
  }
};

}  // namespace kcover
