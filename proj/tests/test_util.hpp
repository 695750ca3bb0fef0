#pragma once

#include "todadual/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace testutil {

using todadual::AlgebraType;
using todadual::Family;

inline double relative(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline std::vector<AlgebraType> algebras(int max_rank, int min_rank = 1) {
  std::vector<AlgebraType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = std::max(min_rank, f == Family::D ? 2 : 1); n <= max_rank; ++n)
      out.push_back(todadual::make_algebra(f, n));
  return out;
}

inline todadual::ComplexMatrix random_complex(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> d;
  todadual::ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = {d(rng), d(rng)};
  return m;
}

inline std::string label(const AlgebraType& a) {
  return todadual::to_string(a.family) + std::to_string(a.rank);
}

}  // namespace testutil
