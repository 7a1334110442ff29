#pragma once

#include <cmath>
#include <numbers>

namespace kcover {

/// Planar position, meters.
struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_distance(Point2D a, Point2D b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(Point2D a, Point2D b) {
  return std::sqrt(squared_distance(a, b));
}

/// Closed-disk membership: the boundary counts as covered.
inline bool disk_covers_point(Point2D center, double radius, Point2D p) {
  return squared_distance(center, p) <= radius * radius;
}

/// Pessimistic square-in-disk test: a node at w_pos covers the square cell of
/// half-side delta centered at s_pos + cell_offset only when the margin
/// R - sqrt(2)*delta strictly exceeds the center distance. When it does, every
/// point of the square lies inside w's closed sensing disk.
inline bool cell_covered_pessimistic(Point2D s_pos, Point2D cell_offset,
                                     Point2D w_pos, double sensing_radius,
                                     double delta) {
  const Point2D cell_center{s_pos.x + cell_offset.x, s_pos.y + cell_offset.y};
  const double margin = sensing_radius - std::numbers::sqrt2 * delta;
  if (margin <= 0.0) return false;
  return squared_distance(cell_center, w_pos) < margin * margin;
}

/// Axis-aligned rectangle, closed on all sides.
struct Rect {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }

  bool contains(Point2D p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
};

}  // namespace kcover
