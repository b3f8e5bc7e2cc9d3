#pragma once

#include <optional>
#include <vector>

#include "dtrp/geometry.hpp"

namespace dtrp {

struct DensityCell {
  ConvexPolygon cell;
  double level = 0.0;  // probability mass per unit area
};

/// Piecewise-uniform spatial density over a convex environment. Cells tile
/// the environment exactly and the total mass integrates to one.
class PiecewiseUniformDensity {
 public:
  /// Validates disjointness, coverage and positivity. With `normalize` the
  /// levels are rescaled so the total mass is exactly one; otherwise a total
  /// mass outside [1 - 1e-9, 1 + 1e-9] is rejected.
  PiecewiseUniformDensity(ConvexPolygon environment, std::vector<DensityCell> cells,
                          bool normalize = false);

  const ConvexPolygon& environment() const { return env_; }
  const std::vector<DensityCell>& cells() const { return cells_; }

  /// Integral of the density raised to `alpha` over `over` (whole
  /// environment when absent), computed with exact polygon clipping.
  double power_integral(double alpha) const;
  double power_integral(double alpha, const ConvexPolygon& over) const;

  /// Probability mass of `over`; power_integral with alpha = 1.
  double region_mass(const ConvexPolygon& over) const;

  /// Index of the cell containing q, lowest index on shared boundaries.
  std::optional<int> cell_index(const Point& q) const;

  double level_at(const Point& q) const;

 private:
  ConvexPolygon env_;
  std::vector<DensityCell> cells_;
};

PiecewiseUniformDensity uniform_density(const ConvexPolygon& environment);

/// Unit square split into a bottom rectangle of area 0.1 with level
/// 1 + 10*eps and a top rectangle of area 0.9 with level 1 - 10*eps/9,
/// which keeps the total mass at exactly one. Valid for eps in [0, 0.89].
PiecewiseUniformDensity epsilon_family(double eps);

/// Unit square split into two half rectangles (bottom/top) with the given
/// levels; levels must average to one.
PiecewiseUniformDensity two_level_halves(double mu_bottom, double mu_top);

}  // namespace dtrp
