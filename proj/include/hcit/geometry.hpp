#pragma once

#include <cmath>

namespace hcit {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Axis-aligned rectangle, half-open: [x0, x1) x [y0, y1).
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  Point center() const { return {(x0 + x1) / 2.0, (y0 + y1) / 2.0}; }

  bool contains(const Point& p) const {
    return p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1;
  }
};

// Overlap test between a half-open cell rectangle and a closed query region.
inline bool cell_overlaps_region(const Rect& cell, const Rect& region) {
  return cell.x0 <= region.x1 && region.x0 < cell.x1 && cell.y0 <= region.y1 &&
         region.y0 < cell.y1;
}

inline Rect bbox_union(const Rect& a, const Rect& b) {
  return {std::min(a.x0, b.x0), std::min(a.y0, b.y0), std::max(a.x1, b.x1),
          std::max(a.y1, b.y1)};
}

}  // namespace hcit
