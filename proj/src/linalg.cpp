#include "todadual/linalg.hpp"

#include "todadual/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace todadual {

namespace {

constexpr double kSpectralGap = 1e-8;
constexpr double kPivotThreshold = 1e-12;

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix is not square");
  }
}

void require_increasing(const std::vector<int>& idx, Eigen::Index bound, const char* what) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= bound || (i > 0 && idx[i] <= idx[i - 1])) {
      throw std::invalid_argument(std::string(what) +
                                  ": indices must be strictly increasing and in range");
    }
  }
}

ComplexMatrix reversal(Eigen::Index n) {
  return ComplexMatrix::Identity(n, n).rowwise().reverse();
}

// Closest unitary matrix (polar factor). Preserves membership in the
// classical groups, whose polar decomposition stays inside the group.
ComplexMatrix unitary_polar_factor(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

Complex determinant(const ComplexMatrix& m) {
  require_square(m, "determinant");
  if (m.rows() == 0) return 1.0;
  return Eigen::PartialPivLU<ComplexMatrix>(m).determinant();
}

Complex bottom_right_minor(const ComplexMatrix& m, int k) {
  require_square(m, "bottom_right_minor");
  if (k < 1 || k > m.rows()) {
    throw std::invalid_argument("bottom_right_minor: k=" + std::to_string(k) + " out of range");
  }
  return determinant(m.bottomRightCorner(k, k));
}

Complex general_minor(const ComplexMatrix& m, const MinorSelector& sel) {
  if (sel.rows.size() != sel.cols.size() || sel.rows.empty()) {
    throw std::invalid_argument("general_minor: selector must have equal nonzero lengths");
  }
  require_increasing(sel.rows, m.rows(), "general_minor");
  require_increasing(sel.cols, m.cols(), "general_minor");
  const auto k = static_cast<Eigen::Index>(sel.rows.size());
  ComplexMatrix sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = m(sel.rows[r], sel.cols[c]);
  return determinant(sub);
}

Diagonalization structured_diagonalize(const RootDatum& datum, const ComplexMatrix& x) {
  const int N = datum.dim();
  const int n = datum.rank();
  if (x.rows() != N || x.cols() != N) {
    throw std::invalid_argument("structured_diagonalize: matrix size does not match the algebra");
  }
  const double scale = std::max(1.0, x.norm());
  if ((x - x.adjoint()).norm() > 1e-10 * scale) {
    throw StructuralError("structured_diagonalize: matrix has a nonzero compact component");
  }
  if (algebra_residual(datum, x) > 1e-10 * scale) {
    throw StructuralError("structured_diagonalize: matrix is not in the algebra");
  }

  const ComplexMatrix herm = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError("structured_diagonalize: eigensolver failed");
  }
  // descending order
  const RealVector values = solver.eigenvalues().reverse();
  const ComplexMatrix vectors = solver.eigenvectors().rowwise().reverse();
  for (int i = 0; i + 1 < N; ++i) {
    if (values(i) - values(i + 1) < kSpectralGap) {
      throw DegenerateSpectrumError("structured_diagonalize: eigenvalue gap " +
                                    std::to_string(values(i) - values(i + 1)) +
                                    " below threshold");
    }
  }

  Diagonalization out;
  out.qhat = values.head(n);
  ComplexMatrix columns(N, N);

  if (datum.family() == Family::A) {
    columns = vectors;
  } else {
    // The eigenvector of -q_i is fixed (up to the torus) by the eigenvector
    // of q_i: Omega conj(u) is an eigenvector of -q for X in the algebra.
    const double pair_sign = datum.family() == Family::C ? -1.0 : 1.0;
    const ComplexMatrix& omega = datum.omega;
    for (int i = 0; i < n; ++i) {
      columns.col(i) = vectors.col(i);
      columns.col(N - 1 - i) = pair_sign * (omega * vectors.col(i).conjugate());
    }
    if (datum.family() == Family::B) {
      Eigen::VectorXcd null = vectors.col(n);
      const Complex phase = null.dot(omega * null.conjugate());  // Omega conj(u) = phase u
      null *= std::sqrt(phase);
      columns.col(n) = null;
    }
    columns = unitary_polar_factor(columns);
  }

  out.k = columns.adjoint();

  if (datum.family() == Family::B || datum.family() == Family::D) {
    if (out.k.determinant().real() < 0.0) {
      if (datum.family() == Family::B) {
        out.k.row(n) *= -1.0;
      } else {
        out.k.row(n - 1).swap(out.k.row(n));
        out.qhat(n - 1) = -out.qhat(n - 1);
      }
    }
  }

  if (chamber_margin(datum.family(), out.qhat) <= 0.0) {
    throw ConsistencyError("structured_diagonalize: spectrum outside the Weyl chamber closure");
  }

  const RealVector pattern = cartan_diagonal(datum, out.qhat);
  const ComplexMatrix conj = out.k * x * out.k.adjoint();
  const double diag_err = (conj - ComplexMatrix(pattern.cast<Complex>().asDiagonal())).norm();
  const double unit_err = (out.k.adjoint() * out.k - ComplexMatrix::Identity(N, N)).norm();
  if (diag_err > 1e-9 * scale || unit_err > 1e-10 || group_residual(datum, out.k) > 1e-10) {
    throw ConsistencyError("structured_diagonalize: structure enforcement failed");
  }
  return out;
}

GaussFactors lower_triangularize(const RootDatum& datum, const ComplexMatrix& g) {
  const int N = datum.dim();
  if (g.rows() != N || g.cols() != N) {
    throw std::invalid_argument("lower_triangularize: matrix size does not match the group");
  }
  const double gnorm = g.norm();
  if (group_residual(datum, g) > 1e-8 * std::max(1.0, gnorm * gnorm)) {
    throw StructuralError("lower_triangularize: matrix is not in the group");
  }

  // g = U L with U unit upper, L lower  <=>  J g J = (J U J)(J L J) is a
  // Doolittle LU factorization without pivoting.
  const ComplexMatrix rev = reversal(N);
  ComplexMatrix work = rev * g * rev;
  ComplexMatrix unit_lower = ComplexMatrix::Identity(N, N);
  for (int c = 0; c < N; ++c) {
    if (std::abs(work(c, c)) < kPivotThreshold * gnorm) {
      throw GaussDecompositionError("lower_triangularize: vanishing trailing minor of size " +
                                    std::to_string(c + 1));
    }
    for (int r = c + 1; r < N; ++r) {
      const Complex f = work(r, c) / work(c, c);
      unit_lower(r, c) = f;
      work.row(r) -= f * work.row(c);
      work(r, c) = 0.0;
    }
  }
  const ComplexMatrix upper = rev * unit_lower * rev;
  GaussFactors out;
  out.glow = rev * ComplexMatrix(work.triangularView<Eigen::Upper>()) * rev;
  out.nplus = upper.triangularView<Eigen::UnitUpper>().solve(ComplexMatrix::Identity(N, N));
  return out;
}

IwasawaFactors iwasawa(const RootDatum& datum, const ComplexMatrix& g) {
  const int N = datum.dim();
  if (g.rows() != N || g.cols() != N) {
    throw std::invalid_argument("iwasawa: matrix size does not match the group");
  }
  // Householder QR of (J g)^dagger = Q1 R1 gives g = (J R1^dagger J)(J Q1^dagger),
  // an upper-triangular times unitary factorization.
  const ComplexMatrix rev = reversal(N);
  Eigen::HouseholderQR<ComplexMatrix> qr((rev * g).adjoint());
  const ComplexMatrix q1 = qr.householderQ();
  const ComplexMatrix r1 = qr.matrixQR().triangularView<Eigen::Upper>();
  ComplexMatrix upper = rev * r1.adjoint() * rev;
  ComplexMatrix unitary = rev * q1.adjoint();

  IwasawaFactors out;
  out.a.resize(N);
  for (int i = 0; i < N; ++i) {
    const double modulus = std::abs(upper(i, i));
    if (modulus == 0.0) throw std::invalid_argument("iwasawa: matrix is singular");
    const Complex phase = upper(i, i) / modulus;
    upper.col(i) /= phase;
    unitary.row(i) *= phase;
    out.a(i) = modulus;
  }
  out.nplus = upper * out.a.cwiseInverse().cast<Complex>().asDiagonal();
  for (int i = 0; i < N; ++i) out.nplus(i, i) = 1.0;
  out.k = unitary;
  return out;
}

}  // namespace todadual
