#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <optional>
#include <vector>

namespace dtrp {

using Point = Eigen::Vector2d;
using Vec2 = Eigen::Vector2d;

// Tolerances used across the library: predicates (containment, orientation)
// and metric assertions (areas, lengths).
inline constexpr double kPredicateTol = 1e-12;
inline constexpr double kMetricTol = 1e-9;

/// Straight motion leg. Zero-length segments are allowed and stand for
/// stationary intervals.
struct Segment {
  Point a{0.0, 0.0};
  Point b{0.0, 0.0};

  double length() const { return (b - a).norm(); }

  /// Position at arc length s from `a`, clamped to the segment.
  Point at(double s) const;

  /// Euclidean distance from q to the closest point of the segment.
  double distance_to(const Point& q) const;
};

/// Convex polygon with counterclockwise vertex order. The constructor
/// normalizes orientation and rejects non-convex or degenerate input.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

 private:
  std::vector<Point> vertices_;
};

double area(const ConvexPolygon& poly);
double diameter(const ConvexPolygon& poly);
Point centroid(const ConvexPolygon& poly);
Eigen::AlignedBox2d bounding_box(const ConvexPolygon& poly);

/// Closed containment test with tolerance kPredicateTol.
bool contains(const ConvexPolygon& poly, const Point& q);

/// Part of `poly` in the half-plane {x : n.dot(x) <= c}. Empty result when
/// the clipped area vanishes.
std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly,
                                            const Vec2& n, double c);

std::optional<ConvexPolygon> intersect(const ConvexPolygon& a,
                                       const ConvexPolygon& b);

/// Earliest time t in [0, leg duration] at which a point moving along `leg`
/// at `speed` is within distance r of q. Empty when the disk is never
/// entered during the leg.
std::optional<double> disk_entry_time(const Segment& leg, double speed,
                                      const Point& q, double r);

ConvexPolygon make_rect(double x0, double y0, double x1, double y1);
ConvexPolygon unit_square();

}  // namespace dtrp
