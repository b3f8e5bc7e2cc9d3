#pragma once

#include <vector>

#include "dtrp/geometry.hpp"

namespace dtrp {

/// One horizontal strip of a boustrophedon sweep: the band it covers and the
/// oriented bisector segment the agent travels.
struct SweepStrip {
  Segment bisector;
  int index = 0;
  double band_lo = 0.0;
  double band_hi = 0.0;
  bool reverse = false;  // true when traveling right to left
};

/// Serpentine strip coverage of a convex region with strip width 2r, swept
/// top to bottom. Bisectors span the bounding rectangle of their strip.
struct SweepPlan {
  std::vector<SweepStrip> strips;
  std::vector<Segment> connectors;  // connectors[i] joins strip i to strip i+1
  double total_length = 0.0;
  double strip_width = 0.0;

  Point start() const { return strips.front().bisector.a; }
  Point end() const { return strips.back().bisector.b; }

  /// Index of the strip whose band contains y (clamped at the extremes).
  int band_index(double y) const;
};

SweepPlan plan_sweep(const ConvexPolygon& region, double r);

struct TimedSegment {
  Segment seg;
  double t_start = 0.0;
};

/// Bisectors and connectors in execution order with start times assuming no
/// detours; detours are spliced in by the engine.
std::vector<TimedSegment> sweep_leg_stream(const SweepPlan& plan, double speed);

/// True when the target lies in the strip currently swept and is not behind
/// the agent along the travel direction. A target exactly at the agent's
/// coordinate counts as ahead.
bool is_serviceable(const SweepPlan& plan, int strip_index, const Point& agent_pos,
                    const Point& target);

}  // namespace dtrp
