#include "dtrp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dtrp {

namespace {

double cross2(const Vec2& u, const Vec2& v) { return u.x() * v.y() - u.y() * v.x(); }

double signed_area(const std::vector<Point>& vs) {
  double s = 0.0;
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = vs[i];
    const Point& q = vs[(i + 1) % n];
    s += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * s;
}

}  // namespace

Point Segment::at(double s) const {
  const double len = length();
  if (len <= 0.0) return a;
  const double t = std::clamp(s / len, 0.0, 1.0);
  return a + t * (b - a);
}

double Segment::distance_to(const Point& q) const {
  const Vec2 d = b - a;
  const double len2 = d.squaredNorm();
  if (len2 <= 0.0) return (q - a).norm();
  const double t = std::clamp((q - a).dot(d) / len2, 0.0, 1.0);
  return (q - (a + t * d)).norm();
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (const Point& p : vertices_) {
    if (!std::isfinite(p.x()) || !std::isfinite(p.y()))
      throw std::invalid_argument("polygon vertex is not finite");
  }
  double a = signed_area(vertices_);
  if (a < 0.0) {
    std::reverse(vertices_.begin(), vertices_.end());
    a = -a;
  }
  if (a <= kPredicateTol) throw std::invalid_argument("degenerate polygon (zero area)");
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = vertices_[(i + 1) % n] - vertices_[i];
    const Vec2 e2 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
    if (cross2(e1, e2) < -kMetricTol) throw std::invalid_argument("polygon is not convex");
  }
}

double area(const ConvexPolygon& poly) { return signed_area(poly.vertices()); }

double diameter(const ConvexPolygon& poly) {
  // Brute-force vertex pairs; polygons here are small.
  const auto& vs = poly.vertices();
  double best = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      best = std::max(best, (vs[i] - vs[j]).norm());
  return best;
}

Point centroid(const ConvexPolygon& poly) {
  const auto& vs = poly.vertices();
  const std::size_t n = vs.size();
  double a6 = 0.0;
  Vec2 c{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = vs[i];
    const Point& q = vs[(i + 1) % n];
    const double w = p.x() * q.y() - q.x() * p.y();
    a6 += w;
    c += w * (p + q);
  }
  return c / (3.0 * a6);
}

Eigen::AlignedBox2d bounding_box(const ConvexPolygon& poly) {
  Eigen::AlignedBox2d box;
  for (const Point& p : poly.vertices()) box.extend(p);
  return box;
}

bool contains(const ConvexPolygon& poly, const Point& q) {
  const auto& vs = poly.vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = vs[(i + 1) % n] - vs[i];
    if (cross2(e, q - vs[i]) < -kPredicateTol * std::max(1.0, e.norm())) return false;
  }
  return true;
}

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, const Vec2& n, double c) {
  const auto& vs = poly.vertices();
  std::vector<Point> out;
  out.reserve(vs.size() + 1);
  const std::size_t m = vs.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& p = vs[i];
    const Point& q = vs[(i + 1) % m];
    const double dp = n.dot(p) - c;
    const double dq = n.dot(q) - c;
    if (dp <= kPredicateTol) out.push_back(p);
    if ((dp < -kPredicateTol && dq > kPredicateTol) || (dp > kPredicateTol && dq < -kPredicateTol)) {
      const double t = dp / (dp - dq);
      out.push_back(p + t * (q - p));
    }
  }
  if (out.size() < 3) return std::nullopt;
  if (std::abs(signed_area(out)) <= kPredicateTol) return std::nullopt;
  // Drop duplicate vertices introduced by clipping at corners.
  std::vector<Point> dedup;
  for (const Point& p : out) {
    if (dedup.empty() || (p - dedup.back()).norm() > kPredicateTol) dedup.push_back(p);
  }
  while (dedup.size() > 1 && (dedup.front() - dedup.back()).norm() <= kPredicateTol) dedup.pop_back();
  if (dedup.size() < 3) return std::nullopt;
  try {
    return ConvexPolygon(std::move(dedup));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<ConvexPolygon> intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
  std::optional<ConvexPolygon> cur = a;
  const auto& vs = b.vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n && cur; ++i) {
    // Interior of b lies where cross(edge, x - v) >= 0, i.e. n.dot(x) <= c
    // with n the inward-rotated edge normal.
    const Vec2 e = vs[(i + 1) % n] - vs[i];
    const Vec2 normal{e.y(), -e.x()};
    cur = clip_halfplane(*cur, normal, normal.dot(vs[i]));
  }
  return cur;
}

std::optional<double> disk_entry_time(const Segment& leg, double speed, const Point& q, double r) {
  if (speed <= 0.0) throw std::invalid_argument("disk_entry_time: speed must be positive");
  if (r < 0.0) throw std::invalid_argument("disk_entry_time: radius must be nonnegative");
  const Vec2 w = leg.a - q;
  const double r2 = r * r;
  if (w.squaredNorm() <= r2 + kPredicateTol) return 0.0;
  const double len = leg.length();
  if (len <= 0.0) return std::nullopt;
  const double dur = len / speed;
  const Vec2 u = (leg.b - leg.a) / dur;  // velocity
  const double a2 = u.squaredNorm();
  const double tstar = -w.dot(u) / a2;  // closest approach (unclamped)
  const double dmin2 = (w + tstar * u).squaredNorm();
  if (dmin2 > r2 + kPredicateTol) return std::nullopt;
  const double back = std::sqrt(std::max(0.0, (r2 - dmin2) / a2));
  const double entry = tstar - back;
  if (entry < -kPredicateTol || entry > dur + kPredicateTol) return std::nullopt;
  return std::clamp(entry, 0.0, dur);
}

ConvexPolygon make_rect(double x0, double y0, double x1, double y1) {
  return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

ConvexPolygon unit_square() { return make_rect(0.0, 0.0, 1.0, 1.0); }

}  // namespace dtrp
