#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dtrp/density.hpp"
#include "dtrp/geometry.hpp"

namespace dtrp {

/// Addressable random stream: distinct stream ids derived from the same
/// master seed give statistically independent streams.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

std::uint64_t splitmix64(std::uint64_t& state);

class RngStream {
 public:
  explicit RngStream(SeedSpec seed);

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform double in [0, 1).
  double u01();

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  double exponential(double rate);

  bool coin() { return (next_u64() & 1ull) != 0; }

  /// Uniform point inside a convex polygon by rejection from its
  /// bounding box.
  Point uniform_in(const ConvexPolygon& poly);

 private:
  std::mt19937_64 eng_;
};

struct TargetArrival {
  int id = 0;
  Point location{0.0, 0.0};
  double t_gen = 0.0;
};

/// Spatio-temporal Poisson arrivals up to `horizon`: exponential
/// inter-arrival times with rate `lambda`, locations drawn from `phi` by
/// first picking a density cell by mass, then uniformly within it.
/// Deterministic given the seed.
std::vector<TargetArrival> arrivals_until(const PiecewiseUniformDensity& phi, double lambda,
                                          double horizon, SeedSpec seed);

/// Number of arrivals with t_gen in [t0, t1) and location inside `region`.
int count_in(const std::vector<TargetArrival>& arrivals, double t0, double t1,
             const ConvexPolygon& region);

}  // namespace dtrp
