#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dtrp/density.hpp"
#include "dtrp/geometry.hpp"
#include "dtrp/stochastic.hpp"

namespace dtrp {

/// Asymptotic Euclidean tour-length coefficient for uniformly distributed
/// points; tours built here with 2-opt land a few percent above it.
inline constexpr double kBhhBeta = 0.7120;

/// Closed tour through a point set. `order` is a permutation of the input
/// indices; `length` is the full cycle length.
struct Tour {
  std::vector<int> order;
  double length = 0.0;
};

/// Nearest-neighbor construction followed by first-improvement 2-opt passes
/// until no improving move remains. Trivial for n <= 3.
Tour build_tour(std::span<const Point> points);

double tour_length(std::span<const Point> points, const std::vector<int>& order);

/// Predicted tour length through n points drawn from phi.
double bhh_predicted_length(const PiecewiseUniformDensity& phi, int n);

/// Position on a tour cycle: arc-length offset plus travel direction.
struct TourCursor {
  double start_offset = 0.0;
  bool forward = true;
};

/// Offset uniform in [0, length), direction a fair coin.
TourCursor random_cursor(const Tour& tour, RngStream& rng);

struct WalkVisit {
  int point_index = 0;  // index into the input point set
  double time = 0.0;    // time of the visit from the start of the walk
};

/// One full cycle of the tour starting from the cursor position, in the
/// cursor direction, at constant speed. Visits are sorted by time and the
/// walk ends back at the start point after length/speed.
struct WalkSchedule {
  Point start{0.0, 0.0};
  std::vector<WalkVisit> visits;
  double duration = 0.0;
};

WalkSchedule walk(std::span<const Point> points, const Tour& tour, const TourCursor& cursor,
                  double speed);

/// Exact optimum by permutation enumeration; intended for n <= 10.
Tour brute_force_tour(std::span<const Point> points);

}  // namespace dtrp
