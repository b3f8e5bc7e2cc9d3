#include "dtrp/density.hpp"

#include <cmath>
#include <stdexcept>

namespace dtrp {

PiecewiseUniformDensity::PiecewiseUniformDensity(ConvexPolygon environment,
                                                 std::vector<DensityCell> cells, bool normalize)
    : env_(std::move(environment)), cells_(std::move(cells)) {
  if (cells_.empty()) throw std::invalid_argument("density needs at least one cell");
  double cover = 0.0;
  double mass = 0.0;
  for (const DensityCell& c : cells_) {
    if (!(c.level > 0.0) || !std::isfinite(c.level))
      throw std::invalid_argument("density level must be strictly positive and finite");
    cover += area(c.cell);
    mass += c.level * area(c.cell);
  }
  const double env_area = area(env_);
  if (std::abs(cover - env_area) > kMetricTol * std::max(1.0, env_area))
    throw std::invalid_argument("density cells do not cover the environment");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (std::size_t j = i + 1; j < cells_.size(); ++j) {
      const auto overlap = intersect(cells_[i].cell, cells_[j].cell);
      if (overlap && area(*overlap) > kMetricTol)
        throw std::invalid_argument("density cells overlap");
    }
  }
  if (normalize) {
    for (DensityCell& c : cells_) c.level /= mass;
  } else if (std::abs(mass - 1.0) > kMetricTol) {
    throw std::invalid_argument("density does not integrate to one");
  }
}

double PiecewiseUniformDensity::power_integral(double alpha) const {
  double s = 0.0;
  for (const DensityCell& c : cells_) s += std::pow(c.level, alpha) * area(c.cell);
  return s;
}

double PiecewiseUniformDensity::power_integral(double alpha, const ConvexPolygon& over) const {
  double s = 0.0;
  double covered = 0.0;
  for (const DensityCell& c : cells_) {
    const auto part = intersect(c.cell, over);
    if (!part) continue;
    const double a = area(*part);
    covered += a;
    s += std::pow(c.level, alpha) * a;
  }
  const double a_over = area(over);
  if (a_over - covered > 1e-7 * std::max(1.0, a_over))
    throw std::invalid_argument("query polygon extends outside the density support");
  return s;
}

double PiecewiseUniformDensity::region_mass(const ConvexPolygon& over) const {
  return power_integral(1.0, over);
}

std::optional<int> PiecewiseUniformDensity::cell_index(const Point& q) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (contains(cells_[i].cell, q)) return static_cast<int>(i);
  return std::nullopt;
}

double PiecewiseUniformDensity::level_at(const Point& q) const {
  const auto idx = cell_index(q);
  if (!idx) throw std::invalid_argument("point outside density support");
  return cells_[*idx].level;
}

PiecewiseUniformDensity uniform_density(const ConvexPolygon& environment) {
  const double level = 1.0 / area(environment);
  return PiecewiseUniformDensity(environment, {{environment, level}});
}

PiecewiseUniformDensity epsilon_family(double eps) {
  if (eps < 0.0 || eps > 0.89)
    throw std::invalid_argument("epsilon_family: eps must lie in [0, 0.89]");
  const double mu_small = 1.0 + 10.0 * eps;
  const double mu_big = 1.0 - 10.0 * eps / 9.0;
  std::vector<DensityCell> cells;
  cells.push_back({make_rect(0.0, 0.0, 1.0, 0.1), mu_small});
  cells.push_back({make_rect(0.0, 0.1, 1.0, 1.0), mu_big});
  return PiecewiseUniformDensity(unit_square(), std::move(cells));
}

PiecewiseUniformDensity two_level_halves(double mu_bottom, double mu_top) {
  std::vector<DensityCell> cells;
  cells.push_back({make_rect(0.0, 0.0, 1.0, 0.5), mu_bottom});
  cells.push_back({make_rect(0.0, 0.5, 1.0, 1.0), mu_top});
  return PiecewiseUniformDensity(unit_square(), std::move(cells));
}

}  // namespace dtrp
