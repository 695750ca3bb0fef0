#include "todadual/moser.hpp"

#include "todadual/combinatorics.hpp"
#include "todadual/errors.hpp"
#include "todadual/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace todadual {

namespace {

constexpr double kPoleGuard = 1e-8;
constexpr double kSpecGap = 1e-10;
constexpr double kOracleTolerance = 1e-8;

void validate_spec(const RuijsenaarsMatrixSpec& spec) {
  if (spec.b.size() != spec.x.size() || spec.b.size() == 0) {
    throw std::invalid_argument("Ruijsenaars matrix: b and x must have equal nonzero length");
  }
  const auto m = spec.x.size();
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j)
      if (std::abs(spec.x(i) - spec.x(j)) <= kSpecGap) {
        throw std::invalid_argument("Ruijsenaars matrix: coincident x entries");
      }
}

}  // namespace

void validate_moser_point(const RootDatum& datum, const MoserPoint& mp) {
  const int n = datum.rank();
  if (mp.qhat.size() != n || mp.ahat.size() != n) {
    throw std::invalid_argument("Moser point must have " + std::to_string(n) + " coordinates");
  }
  if (!mp.qhat.allFinite() || !mp.ahat.allFinite()) {
    throw std::invalid_argument("Moser point has non-finite entries");
  }
  if ((mp.ahat.array() <= 0.0).any()) {
    throw std::invalid_argument("Moser point: ahat must be positive");
  }
  const double margin = chamber_margin(datum.family(), mp.qhat);
  if (margin <= 0.0) throw ChamberError("qhat outside the open Weyl chamber");
  if (margin < kPoleGuard) throw ChamberError("qhat within 1e-8 of a chamber wall");
}

ComplexMatrix build_ruijsenaars_matrix(const RuijsenaarsMatrixSpec& spec) {
  validate_spec(spec);
  const auto m = spec.x.size();
  ComplexMatrix out = ComplexMatrix::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    double entry = spec.b(j);
    out(j, j) = entry;
    for (Eigen::Index i = j + 1; i < m; ++i) {
      entry /= spec.x(j) - spec.x(i);
      out(i, j) = entry;
    }
  }
  return out;
}

double closed_form_minor(const RuijsenaarsMatrixSpec& spec, const std::vector<int>& cols) {
  validate_spec(spec);
  const auto m = static_cast<int>(spec.x.size());
  if (cols.empty() || static_cast<int>(cols.size()) > m) {
    throw std::invalid_argument("closed_form_minor: need 1 <= k <= m columns");
  }
  for (std::size_t r = 0; r < cols.size(); ++r) {
    if (cols[r] < 0 || cols[r] >= m || (r > 0 && cols[r] <= cols[r - 1])) {
      throw std::invalid_argument("closed_form_minor: columns must be strictly increasing");
    }
  }
  const auto in_cols = subset_mask(m, cols);
  double value = 1.0;
  for (int i : cols) {
    value *= spec.b(i);
    for (int j = i + 1; j < m; ++j)
      if (!in_cols[j]) value /= spec.x(i) - spec.x(j);
  }
  return value;
}

ComplexMatrix build_moser_g(const RootDatum& datum, const MoserPoint& mp) {
  validate_moser_point(datum, mp);
  const int n = datum.rank();
  const int N = datum.dim();
  const Family family = datum.family();
  // 1-based accessors
  auto Q = [&](int i) { return mp.qhat(i - 1); };
  auto a = [&](int i) { return mp.ahat(i - 1); };
  // A_ij = a_j prod_{k=j+1..i} 1/(q_j - q_k)
  auto block_a = [&](int i, int j) {
    if (j > i) return 0.0;
    double v = a(j);
    for (int k = j + 1; k <= i; ++k) v /= Q(j) - Q(k);
    return v;
  };

  ComplexMatrix g = ComplexMatrix::Zero(N, N);
  auto set = [&](int i, int j, double v) { g(i - 1, j - 1) = v; };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) set(i, j, block_a(i, j));
  if (family == Family::A) return g;

  // bottom-right block P (A^T)^{-1} P
  const int offset = family == Family::B ? n + 1 : n;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      double v = ((i - j) % 2 == 0 ? 1.0 : -1.0) / a(n + 1 - j);
      for (int k = j + 1; k <= i; ++k) v /= Q(n + 1 - k) - Q(n + 1 - j);
      set(offset + i, offset + j, v);
    }
  }

  switch (family) {
    case Family::C:
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          double v = (i % 2 == 1 ? 1.0 : -1.0) * block_a(n, j);
          for (int m = 1; m <= i; ++m) v /= Q(n + 1 - m) + Q(j);
          set(n + i, j, v);
        }
      }
      break;
    case Family::B: {
      set(n + 1, n + 1, 1.0);
      for (int j = 1; j <= n; ++j) set(n + 1, j, block_a(n, j) / Q(j));
      double c2 = 1.0;
      for (int i = 1; i <= n; ++i) {
        c2 *= -1.0 / Q(n + 1 - i);
        set(n + 1 + i, n + 1, c2);
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          double v = (i % 2 == 0 ? 1.0 : -1.0) * block_a(n, j) / Q(j);
          for (int l = 1; l <= i; ++l) v /= Q(j) + Q(n + 1 - l);
          set(n + 1 + i, j, v);
        }
      }
      break;
    }
    case Family::D:
      for (int j = 1; j <= n; ++j) {
        if (j < n) set(n + 1, j, -block_a(n - 1, j) / (Q(j) + Q(n)));
        for (int i = 2; i <= n; ++i) {
          // 2 q_j cancels the k = n+1-j factor 1/(2 q_j) when it occurs
          double v = (i % 2 == 0 ? 1.0 : -1.0) * block_a(n, j);
          bool cancelled = false;
          for (int k = 1; k <= i; ++k) {
            if (n + 1 - k == j) {
              cancelled = true;
              continue;
            }
            v /= Q(j) + Q(n + 1 - k);
          }
          if (!cancelled) v *= 2.0 * Q(j);
          set(n + i, j, v);
        }
      }
      break;
    case Family::A:
      break;
  }
  return g;
}

double minor_oracle_mk(const ComplexMatrix& g, int k) {
  const auto N = static_cast<int>(g.rows());
  if (g.cols() != N) throw std::invalid_argument("minor_oracle_mk: g must be square");
  if (k < 1 || k > N) throw std::invalid_argument("minor_oracle_mk: k out of range");

  const double direct = bottom_right_minor(g * g.adjoint(), k).real();

  MinorSelector sel;
  for (int r = N - k; r < N; ++r) sel.rows.push_back(r);
  double binet = 0.0;
  for_each_combination(N, k, [&](const std::vector<int>& cols) {
    sel.cols = cols;
    binet += std::norm(general_minor(g, sel));
  });

  if (std::abs(direct - binet) > kOracleTolerance * std::max(std::abs(direct), std::abs(binet))) {
    throw ConsistencyError("minor_oracle_mk: direct minor " + std::to_string(direct) +
                           " disagrees with Cauchy-Binet sum " + std::to_string(binet));
  }
  return direct;
}

double minor_oracle_mk(const RootDatum& datum, const MoserPoint& mp, int k) {
  if (k < 1 || k > datum.dim()) throw std::invalid_argument("minor_oracle_mk: k out of range");
  return minor_oracle_mk(build_moser_g(datum, mp), k);
}

double moser_momentum_residual(const RootDatum& datum, const ComplexMatrix& g,
                               const RealVector& qhat) {
  const int N = datum.dim();
  if (g.rows() != N || g.cols() != N) {
    throw std::invalid_argument("moser_momentum_residual: matrix size does not match the group");
  }
  const ComplexMatrix x = cartan_diagonal(datum, qhat).cast<Complex>().asDiagonal();
  // g X g^{-1} via a solve against g^T
  const ComplexMatrix gx = g * x;
  const ComplexMatrix conj =
      g.transpose().partialPivLu().solve(gx.transpose()).transpose();
  return (conj - x - datum.momentum_value).norm();
}

double moser_momentum_residual(const RootDatum& datum, const MoserPoint& mp) {
  return moser_momentum_residual(datum, build_moser_g(datum, mp), mp.qhat);
}

}  // namespace todadual
