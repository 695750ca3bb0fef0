#include "todadual/sampling.hpp"

#include <algorithm>
#include <functional>

namespace todadual {

std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Sampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

TodaPoint Sampler::toda_point(const RootDatum& datum) {
  const int n = datum.rank();
  TodaPoint pt{RealVector(n), RealVector(n)};
  for (int i = 0; i < n; ++i) pt.q(i) = uniform(-1.0, 1.0);
  for (int i = 0; i < n; ++i) pt.p(i) = uniform(-1.0, 1.0);
  return pt;
}

GoldfishPoint Sampler::chamber_point(const RootDatum& datum) {
  const int n = datum.rank();
  const bool signed_range = datum.family() == Family::A;
  const double lo = signed_range ? -2.0 : 0.3;
  const double hi = signed_range ? 2.0 : 3.0;
  GoldfishPoint gp{RealVector(n), RealVector(n)};
  while (true) {
    for (int i = 0; i < n; ++i) gp.qhat(i) = uniform(lo, hi);
    std::sort(gp.qhat.data(), gp.qhat.data() + n, std::greater<>());
    bool spaced = true;
    for (int i = 0; i + 1 < n; ++i) spaced = spaced && gp.qhat(i) - gp.qhat(i + 1) >= 0.2;
    if (spaced) break;
  }
  for (int i = 0; i < n; ++i) gp.phat(i) = uniform(-1.0, 1.0);
  return gp;
}

}  // namespace todadual
