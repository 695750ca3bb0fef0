#pragma once

#include "todadual/rootsys.hpp"

#include <vector>

namespace todadual {

/// Rows and columns of a square submatrix, 0-based and strictly increasing.
struct MinorSelector {
  std::vector<int> rows;
  std::vector<int> cols;
};

/// Determinant by partial-pivot LU. Throws std::invalid_argument if not square.
Complex determinant(const ComplexMatrix& m);

/// Determinant of the trailing k x k block (k bottom rows, k right columns).
Complex bottom_right_minor(const ComplexMatrix& m, int k);

Complex general_minor(const ComplexMatrix& m, const MinorSelector& sel);

struct Diagonalization {
  ComplexMatrix k;  // k X k^{-1} = diag pattern; k in the maximal compact subgroup
  RealVector qhat;  // spectral coordinates in the Weyl chamber
};

/// Brings a Hermitian element of the algebra to its diagonal Cartan pattern
/// with a structure-preserving unitary. The phases of the torus U(1)^n that
/// commutes with the result are left unnormalized.
Diagonalization structured_diagonalize(const RootDatum& datum, const ComplexMatrix& x);

struct GaussFactors {
  ComplexMatrix nplus;  // unit upper-triangular
  ComplexMatrix glow;   // lower-triangular, glow = nplus * g
};

/// Gauss decomposition g = nplus^{-1} glow. Throws GaussDecompositionError
/// outside the dense cell (vanishing trailing minors).
GaussFactors lower_triangularize(const RootDatum& datum, const ComplexMatrix& g);

struct IwasawaFactors {
  ComplexMatrix nplus;  // unit upper-triangular
  RealVector a;         // positive diagonal
  ComplexMatrix k;      // unitary (and in the group for B/C/D)
};

/// Iwasawa decomposition g = nplus * diag(a) * k.
IwasawaFactors iwasawa(const RootDatum& datum, const ComplexMatrix& g);

}  // namespace todadual
