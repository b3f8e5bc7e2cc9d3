#include "dtrp/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dtrp {

namespace {

inline double dist(const Point& a, const Point& b) { return (a - b).norm(); }

}  // namespace

double tour_length(std::span<const Point> points, const std::vector<int>& order) {
  const std::size_t n = order.size();
  if (n < 2) return 0.0;
  double len = 0.0;
  for (std::size_t k = 0; k < n; ++k) len += dist(points[order[k]], points[order[(k + 1) % n]]);
  return len;
}

Tour build_tour(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  Tour tour;
  tour.order.resize(n);
  std::iota(tour.order.begin(), tour.order.end(), 0);
  if (n <= 3) {
    tour.length = tour_length(points, tour.order);
    return tour;
  }

  // Nearest-neighbor construction from the first point.
  std::vector<bool> used(n, false);
  std::vector<int>& ord = tour.order;
  ord.assign(1, 0);
  ord.reserve(n);
  used[0] = true;
  int cur = 0;
  for (int step = 1; step < n; ++step) {
    int best = -1;
    double best_d2 = 0.0;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double d2 = (points[cur] - points[j]).squaredNorm();
      if (best < 0 || d2 < best_d2) {
        best = j;
        best_d2 = d2;
      }
    }
    used[best] = true;
    ord.push_back(best);
    cur = best;
  }

  // First-improvement 2-opt passes until locally optimal.
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n - 1; ++i) {
      const Point& pa = points[ord[i]];
      const Point& pb = points[ord[i + 1]];
      const double d_ab = dist(pa, pb);
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // adjacent edges on the cycle
        const Point& pc = points[ord[j]];
        const Point& pd = points[ord[(j + 1) % n]];
        const double delta = dist(pa, pc) + dist(pb, pd) - d_ab - dist(pc, pd);
        if (delta < -1e-12) {
          std::reverse(ord.begin() + i + 1, ord.begin() + j + 1);
          improved = true;
          break;
        }
      }
    }
  }
  tour.length = tour_length(points, tour.order);
  return tour;
}

double bhh_predicted_length(const PiecewiseUniformDensity& phi, int n) {
  if (n < 0) throw std::invalid_argument("bhh_predicted_length: n must be nonnegative");
  return kBhhBeta * std::sqrt(static_cast<double>(n)) * phi.power_integral(0.5);
}

TourCursor random_cursor(const Tour& tour, RngStream& rng) {
  TourCursor cur;
  cur.start_offset = tour.length > 0.0 ? rng.u01() * tour.length : 0.0;
  cur.forward = rng.coin();
  return cur;
}

WalkSchedule walk(std::span<const Point> points, const Tour& tour, const TourCursor& cursor,
                  double speed) {
  if (speed <= 0.0) throw std::invalid_argument("walk: speed must be positive");
  WalkSchedule sched;
  const std::size_t n = tour.order.size();
  if (n == 0) return sched;
  if (n == 1 || tour.length <= 0.0) {
    sched.start = points[tour.order[0]];
    for (std::size_t k = 0; k < n; ++k) sched.visits.push_back({tour.order[k], 0.0});
    return sched;
  }

  // Arc-length position of every tour vertex along the cycle.
  std::vector<double> arc(n, 0.0);
  for (std::size_t k = 1; k < n; ++k)
    arc[k] = arc[k - 1] + dist(points[tour.order[k - 1]], points[tour.order[k]]);
  const double L = tour.length;
  const double offset = std::clamp(cursor.start_offset, 0.0, std::nexttoward(L, 0.0));

  std::size_t edge = n - 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (offset >= arc[k] && offset < arc[k + 1]) {
      edge = k;
      break;
    }
  }
  const Point& ea = points[tour.order[edge]];
  const Point& eb = points[tour.order[(edge + 1) % n]];
  const double elen = dist(ea, eb);
  const double along = offset - arc[edge];
  sched.start = elen > 0.0 ? Point(ea + (along / elen) * (eb - ea)) : ea;

  sched.visits.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double d = cursor.forward ? arc[k] - offset : offset - arc[k];
    d = std::fmod(d, L);
    if (d < 0.0) d += L;
    sched.visits.push_back({tour.order[k], d / speed});
  }
  std::sort(sched.visits.begin(), sched.visits.end(),
            [](const WalkVisit& a, const WalkVisit& b) {
              return a.time != b.time ? a.time < b.time : a.point_index < b.point_index;
            });
  sched.duration = L / speed;
  return sched;
}

Tour brute_force_tour(std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  Tour best;
  best.order.resize(n);
  std::iota(best.order.begin(), best.order.end(), 0);
  best.length = tour_length(points, best.order);
  if (n <= 3) return best;
  std::vector<int> perm(best.order.begin() + 1, best.order.end());
  std::vector<int> ord(n, 0);
  do {
    std::copy(perm.begin(), perm.end(), ord.begin() + 1);
    const double len = tour_length(points, ord);
    if (len < best.length) {
      best.length = len;
      best.order = ord;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace dtrp
