#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace dsf {

/// Planar point. Coordinates must be finite.
struct Point {
  double x1 = 0.0;  // abscissa
  double x2 = 0.0;  // ordinate

  friend bool operator==(const Point& a, const Point& b) {
    return a.x1 == b.x1 && a.x2 == b.x2;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Chebyshev distance, the metric every ball in this code uses.
inline double linf_dist(const Point& a, const Point& b) {
  return std::max(std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2));
}

/// Axis-aligned rectangle with per-side openness flags.
/// A degenerate side (lo == hi) with either flag open makes the rectangle empty.
struct Rect {
  double lo1 = 0.0, hi1 = 0.0, lo2 = 0.0, hi2 = 0.0;
  bool lo1_open = false, hi1_open = false, lo2_open = false, hi2_open = false;

  static Rect open(double lo1, double hi1, double lo2, double hi2) {
    return Rect{lo1, hi1, lo2, hi2, true, true, true, true};
  }
  static Rect closed(double lo1, double hi1, double lo2, double hi2) {
    return Rect{lo1, hi1, lo2, hi2, false, false, false, false};
  }

  bool empty() const {
    if (lo1 > hi1 || lo2 > hi2) return true;
    if (lo1 == hi1 && (lo1_open || hi1_open)) return true;
    if (lo2 == hi2 && (lo2_open || hi2_open)) return true;
    return false;
  }

  double width() const { return empty() ? 0.0 : hi1 - lo1; }
  double height() const { return empty() ? 0.0 : hi2 - lo2; }
  double area() const { return width() * height(); }

  bool contains(const Point& p) const {
    if (empty()) return false;
    if (lo1_open ? (p.x1 <= lo1) : (p.x1 < lo1)) return false;
    if (hi1_open ? (p.x1 >= hi1) : (p.x1 > hi1)) return false;
    if (lo2_open ? (p.x2 <= lo2) : (p.x2 < lo2)) return false;
    if (hi2_open ? (p.x2 >= hi2) : (p.x2 > hi2)) return false;
    return true;
  }

  /// True when `other` lies inside this rectangle regardless of flags
  /// (closure containment; used only to skip work, never to admit points).
  bool covers(const Rect& other) const {
    if (empty() || other.empty()) return false;
    return lo1 <= other.lo1 && other.hi1 <= hi1 && lo2 <= other.lo2 &&
           other.hi2 <= hi2;
  }

  bool finite() const {
    return std::isfinite(lo1) && std::isfinite(hi1) && std::isfinite(lo2) &&
           std::isfinite(hi2);
  }
};

/// Open upper half of the Chebyshev ball of radius r at `center`:
/// (c1 - r, c1 + r) x (c2, c2 + r). Requires r > 0.
Rect upper_half_ball(const Point& center, double r);

/// Finite union of rectangles kept strictly above a moving floor.
/// Rectangles are stored unmerged; overlap is allowed.
struct HistoryRegion {
  std::vector<Rect> rects;
  double floor = 0.0;

  bool empty() const { return rects.empty(); }
};

/// Height of the union: max top ordinate minus min bottom ordinate, 0 if empty.
double region_height(const HistoryRegion& h);

/// Intersects every rectangle with the open half-plane {x2 > floor} and drops
/// the ones that sink below it. The floor can only move up.
HistoryRegion clip_above(const HistoryRegion& h, double floor);

/// Membership in the open union.
bool region_contains(const HistoryRegion& h, const Point& p);

/// Appends a rectangle and re-clips at the given floor.
HistoryRegion region_union_clip(const HistoryRegion& h, const Rect& r, double floor);

/// True when the displacement mover -> ancestor ends on the top edge of the
/// ancestor's ball, i.e. the vertical displacement equals the Chebyshev
/// distance. The two values are bit-identical whenever dy >= |dx|, so the
/// comparison is exact. Requires ancestor.x2 > mover.x2.
bool top_boundary_hit(const Point& mover, const Point& ancestor);

/// Cone with apex opening upward at 45 degrees on each side.
struct Cone {
  Point apex;

  bool contains(const Point& p) const {
    return p.x2 - apex.x2 >= std::abs(p.x1 - apex.x1);
  }
};

}  // namespace dsf
