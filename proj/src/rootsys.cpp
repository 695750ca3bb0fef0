#include "todadual/rootsys.hpp"

#include "todadual/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace todadual {

namespace {

// 1-based elementary matrix E_ij of size n.
ComplexMatrix unit(int n, int i, int j) {
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(i - 1, j - 1) = 1.0;
  return e;
}

RealVector root_weight(int rank, std::initializer_list<std::pair<int, double>> entries) {
  RealVector w = RealVector::Zero(rank);
  for (auto [i, c] : entries) w(i - 1) = c;
  return w;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "A" || name == "a") return Family::A;
  if (name == "B" || name == "b") return Family::B;
  if (name == "C" || name == "c") return Family::C;
  if (name == "D" || name == "d") return Family::D;
  throw std::invalid_argument("unknown algebra family '" + std::string(name) + "'");
}

int AlgebraType::dim() const {
  switch (family) {
    case Family::A: return rank;
    case Family::B: return 2 * rank + 1;
    case Family::C:
    case Family::D: return 2 * rank;
  }
  return 0;
}

AlgebraType make_algebra(Family family, int rank) {
  if (rank < 1) {
    throw std::invalid_argument("rank must be >= 1, got " + std::to_string(rank));
  }
  if (family == Family::D && rank < 2) {
    throw std::invalid_argument("type D requires rank >= 2, got " + std::to_string(rank));
  }
  return AlgebraType{family, rank};
}

RootDatum build_root_datum(AlgebraType algebra) {
  algebra = make_algebra(algebra.family, algebra.rank);
  const int n = algebra.rank;
  const int N = algebra.dim();
  auto mirror = [N](int i) { return N + 1 - i; };

  RootDatum datum;
  datum.algebra = algebra;

  switch (algebra.family) {
    case Family::A:
      datum.omega = ComplexMatrix::Identity(N, N);
      break;
    case Family::B:
    case Family::D:
      datum.omega = ComplexMatrix::Zero(N, N);
      for (int i = 1; i <= N; ++i) datum.omega(i - 1, mirror(i) - 1) = 1.0;
      break;
    case Family::C:
      datum.omega = ComplexMatrix::Zero(N, N);
      for (int i = 1; i <= n; ++i) {
        datum.omega(i - 1, mirror(i) - 1) = 1.0;
        datum.omega(mirror(i) - 1, i - 1) = -1.0;
      }
      break;
  }

  for (int i = 1; i <= n; ++i) {
    if (algebra.family == Family::A) {
      datum.cartan.push_back(unit(N, i, i));
    } else {
      datum.cartan.push_back(unit(N, i, i) - unit(N, mirror(i), mirror(i)));
    }
  }

  for (int i = 1; i < n; ++i) {
    ComplexMatrix lowering = unit(N, i + 1, i);
    if (algebra.family != Family::A) lowering -= unit(N, mirror(i), mirror(i + 1));
    datum.simple_roots.push_back(
        {lowering.transpose(), lowering, root_weight(n, {{i, 1.0}, {i + 1, -1.0}})});
  }

  switch (algebra.family) {
    case Family::A:
      break;
    case Family::B: {
      // short root e_n
      ComplexMatrix lowering = unit(N, n + 1, n) - unit(N, n + 2, n + 1);
      datum.simple_roots.push_back({lowering.transpose(), lowering, root_weight(n, {{n, 1.0}})});
      break;
    }
    case Family::C: {
      // long root 2 e_n
      ComplexMatrix lowering = unit(N, n + 1, n);
      datum.simple_roots.push_back({lowering.transpose(), lowering, root_weight(n, {{n, 2.0}})});
      break;
    }
    case Family::D: {
      // e_{n-1} + e_n
      ComplexMatrix lowering = unit(N, n + 2, n) - unit(N, n + 1, n - 1);
      datum.simple_roots.push_back(
          {lowering.transpose(), lowering, root_weight(n, {{n - 1, 1.0}, {n, 1.0}})});
      break;
    }
  }

  datum.momentum_value = ComplexMatrix::Zero(N, N);
  for (const auto& root : datum.simple_roots) datum.momentum_value += root.lowering;
  return datum;
}

ComplexMatrix momentum_value(const RootDatum& datum) { return datum.momentum_value; }

ComplexMatrix project_lower_nilpotent(const RootDatum& datum, const ComplexMatrix& m) {
  if (m.rows() != datum.dim() || m.cols() != datum.dim()) {
    throw std::invalid_argument("project_lower_nilpotent: matrix size does not match the algebra");
  }
  ComplexMatrix out = m.triangularView<Eigen::StrictlyLower>();
  return out;
}

double algebra_residual(const RootDatum& datum, const ComplexMatrix& m) {
  if (datum.family() == Family::A) return 0.0;
  return (m * datum.omega + datum.omega * m.transpose()).norm();
}

double group_residual(const RootDatum& datum, const ComplexMatrix& g) {
  if (datum.family() == Family::A) return 0.0;
  return (g * datum.omega * g.transpose() - datum.omega).norm();
}

ComplexMatrix project_compact(const RootDatum& datum, const ComplexMatrix& x) {
  if (x.rows() != datum.dim() || x.cols() != datum.dim()) {
    throw std::invalid_argument("project_compact: matrix size does not match the algebra");
  }
  const double tol = 1e-10 * std::max(1.0, x.norm());
  if (algebra_residual(datum, x) > tol) {
    throw StructuralError("project_compact: matrix is not in the algebra");
  }
  return 0.5 * (x - x.adjoint());
}

RealVector cartan_diagonal(const RootDatum& datum, const RealVector& coords) {
  const int n = datum.rank();
  if (coords.size() != n) {
    throw std::invalid_argument("cartan_diagonal: expected " + std::to_string(n) + " coordinates");
  }
  const int N = datum.dim();
  RealVector d = RealVector::Zero(N);
  for (int i = 0; i < n; ++i) {
    d(i) = coords(i);
    if (datum.family() != Family::A) d(N - 1 - i) = -coords(i);
  }
  return d;
}

double chamber_margin(Family family, const RealVector& qhat) {
  const auto n = qhat.size();
  double margin = std::numeric_limits<double>::infinity();
  if (family == Family::D) {
    for (Eigen::Index i = 0; i + 2 < n; ++i) margin = std::min(margin, qhat(i) - qhat(i + 1));
    if (n >= 2) margin = std::min(margin, qhat(n - 2) - std::abs(qhat(n - 1)));
    return margin;
  }
  for (Eigen::Index i = 0; i + 1 < n; ++i) margin = std::min(margin, qhat(i) - qhat(i + 1));
  if (family != Family::A && n >= 1) margin = std::min(margin, qhat(n - 1));
  return margin;
}

SymplecticForm reduced_form(Family family) {
  return SymplecticForm{family == Family::A ? 1.0 : 2.0};
}

}  // namespace todadual
