#include "dtrp/stochastic.hpp"

#include <cmath>
#include <stdexcept>

namespace dtrp {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

RngStream::RngStream(SeedSpec seed) {
  std::uint64_t s = seed.master_seed;
  const std::uint64_t a = splitmix64(s);
  s = seed.stream_id ^ 0xD1B54A32D192ED03ull;
  const std::uint64_t b = splitmix64(s);
  s = a ^ b;
  eng_.seed(splitmix64(s));
}

double RngStream::u01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::exponential(double rate) {
  if (rate <= 0.0) throw std::invalid_argument("exponential: rate must be positive");
  return -std::log1p(-u01()) / rate;
}

Point RngStream::uniform_in(const ConvexPolygon& poly) {
  const auto box = bounding_box(poly);
  for (;;) {
    const Point p{uniform(box.min().x(), box.max().x()), uniform(box.min().y(), box.max().y())};
    if (contains(poly, p)) return p;
  }
}

std::vector<TargetArrival> arrivals_until(const PiecewiseUniformDensity& phi, double lambda,
                                          double horizon, SeedSpec seed) {
  if (lambda <= 0.0) throw std::invalid_argument("arrivals_until: lambda must be positive");
  if (horizon <= 0.0) throw std::invalid_argument("arrivals_until: horizon must be positive");
  RngStream rng(seed);

  std::vector<double> cum_mass;
  cum_mass.reserve(phi.cells().size());
  double acc = 0.0;
  for (const DensityCell& c : phi.cells()) {
    acc += c.level * area(c.cell);
    cum_mass.push_back(acc);
  }

  std::vector<TargetArrival> out;
  double t = 0.0;
  int id = 0;
  for (;;) {
    t += rng.exponential(lambda);
    if (t >= horizon) break;
    const double u = rng.u01() * acc;
    std::size_t j = 0;
    while (j + 1 < cum_mass.size() && u > cum_mass[j]) ++j;
    out.push_back({id++, rng.uniform_in(phi.cells()[j].cell), t});
  }
  return out;
}

int count_in(const std::vector<TargetArrival>& arrivals, double t0, double t1,
             const ConvexPolygon& region) {
  if (!(t0 < t1)) throw std::invalid_argument("count_in: empty window");
  int n = 0;
  for (const TargetArrival& a : arrivals) {
    if (a.t_gen >= t0 && a.t_gen < t1 && contains(region, a.location)) ++n;
  }
  return n;
}

}  // namespace dtrp
