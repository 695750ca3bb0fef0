#pragma once

#include "todadual/rootsys.hpp"

#include <vector>

namespace todadual {

struct MoserPoint {
  RealVector qhat;  // open Weyl chamber
  RealVector ahat;  // positive
};

/// Lower-triangular M with M_ij = b_j prod_{k=j+1..i} 1/(x_j - x_k).
struct RuijsenaarsMatrixSpec {
  RealVector b;
  RealVector x;
};

/// Throws ChamberError outside the open chamber or within 1e-8 of a wall.
void validate_moser_point(const RootDatum& datum, const MoserPoint& mp);

ComplexMatrix build_ruijsenaars_matrix(const RuijsenaarsMatrixSpec& spec);

/// Minor of the bottom cols.size() rows of M on the given (0-based) columns:
/// prod_r b_{i_r} prod_{j > i_r, j not in cols} 1/(x_{i_r} - x_j).
double closed_form_minor(const RuijsenaarsMatrixSpec& spec, const std::vector<int>& cols);

/// Lower-triangular group element of the Moser gauge, from the closed-form
/// block entries of each type.
ComplexMatrix build_moser_g(const RootDatum& datum, const MoserPoint& mp);

/// m_k(g g^dagger): bottom-right k x k minor. Computed directly and by
/// Cauchy-Binet over the bottom k rows of g; throws ConsistencyError if the
/// two differ by more than 1e-8 relative.
double minor_oracle_mk(const ComplexMatrix& g, int k);
double minor_oracle_mk(const RootDatum& datum, const MoserPoint& mp, int k);

/// |g X g^{-1} - X - lambda|_F with X the diagonal pattern of qhat.
double moser_momentum_residual(const RootDatum& datum, const ComplexMatrix& g,
                               const RealVector& qhat);
double moser_momentum_residual(const RootDatum& datum, const MoserPoint& mp);

}  // namespace todadual
