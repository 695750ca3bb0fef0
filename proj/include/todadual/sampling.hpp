#pragma once

#include "todadual/goldfish.hpp"
#include "todadual/toda.hpp"

#include <cstdint>
#include <random>

namespace todadual {

/// Independent per-point seed derived from a run seed (splitmix64 mixing).
std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic sampler: the stream depends only on the seed, not on the
/// standard library implementation.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// q, p uniform in [-1, 1].
  TodaPoint toda_point(const RootDatum& datum);

  /// qhat in the chamber with neighbouring gaps >= 0.2 (A: qhat in [-2, 2];
  /// B/C/D: qhat in [0.3, 3], so qhat_n > 0 also for D), phat in [-1, 1].
  GoldfishPoint chamber_point(const RootDatum& datum);

 private:
  std::mt19937_64 engine_;
};

}  // namespace todadual
