#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace todadual {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

enum class Family { A, B, C, D };

std::string to_string(Family family);
Family parse_family(std::string_view name);

/// A classical algebra in its vector representation. Type A is gl(n).
struct AlgebraType {
  Family family;
  int rank;

  /// Size N of the representation matrices.
  int dim() const;
};

/// Validates the rank (>= 1, >= 2 for D) and returns the type.
AlgebraType make_algebra(Family family, int rank);

/// A simple root together with its root-vector pair. `weight` holds the
/// components of the root in the orthonormal basis e_1..e_n, so that
/// Ad_{exp(sum q_i h_i)} raising = exp(weight . q) raising.
struct SimpleRoot {
  ComplexMatrix raising;
  ComplexMatrix lowering;
  RealVector weight;
};

struct RootDatum {
  AlgebraType algebra;
  ComplexMatrix omega;                  // bilinear form; identity for A
  std::vector<ComplexMatrix> cartan;    // h_1..h_n
  std::vector<SimpleRoot> simple_roots;
  ComplexMatrix momentum_value;         // lambda = sum of lowering vectors

  int rank() const { return algebra.rank; }
  int dim() const { return algebra.dim(); }
  Family family() const { return algebra.family; }
};

RootDatum build_root_datum(AlgebraType algebra);

ComplexMatrix momentum_value(const RootDatum& datum);

/// Strictly lower-triangular part; for these representations this is the
/// projection onto n_- along b_+.
ComplexMatrix project_lower_nilpotent(const RootDatum& datum, const ComplexMatrix& m);

/// The k-component (X - X^dagger)/2. Throws StructuralError if X is not in
/// the algebra.
ComplexMatrix project_compact(const RootDatum& datum, const ComplexMatrix& x);

/// ||M Omega + Omega M^T||_F, zero for type A.
double algebra_residual(const RootDatum& datum, const ComplexMatrix& m);

/// ||g Omega g^T - Omega||_F, zero for type A.
double group_residual(const RootDatum& datum, const ComplexMatrix& g);

/// Diagonal of sum_i c_i h_i: (c) for A, (c, -rev c) for C/D,
/// (c, 0, -rev c) for B.
RealVector cartan_diagonal(const RootDatum& datum, const RealVector& coords);

/// Smallest margin of `qhat` inside the open Weyl chamber of the family.
/// Negative or zero means outside.
///   A: q1 > ... > qn
///   B, C: q1 > ... > qn > 0
///   D: q1 > ... > q_{n-1} > |qn|
double chamber_margin(Family family, const RealVector& qhat);

/// Scale s of the reduced form s * sum dp ^ dq: 1 for A, 2 otherwise.
struct SymplecticForm {
  double scale;
};

SymplecticForm reduced_form(Family family);

}  // namespace todadual
