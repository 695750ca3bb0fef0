#pragma once

#include "todadual/rootsys.hpp"

#include <vector>

namespace todadual {

struct TodaPoint {
  RealVector q;
  RealVector p;
};

struct LaxPair {
  ComplexMatrix g;  // exp(sum q_i h_i)
  ComplexMatrix X;  // real symmetric Lax matrix
};

void validate_toda_point(const RootDatum& datum, const TodaPoint& pt);

LaxPair build_lax(const RootDatum& datum, const TodaPoint& pt);

/// H_1..H_kmax. A: Tr(X^k)/k. B/C/D: Tr(X^{2k})/(4k).
RealVector toda_hamiltonians(const RootDatum& datum, const TodaPoint& pt, int kmax);
RealVector toda_hamiltonians_from_lax(const RootDatum& datum, const ComplexMatrix& x, int kmax);

/// Same sums with every eigenvalue replaced by its modulus. Used as the
/// reference magnitude for relative comparisons of H_k.
RealVector toda_hamiltonian_scales(const RootDatum& datum, const RealVector& spectrum, int kmax);

/// Index of the kinetic-plus-potential Hamiltonian (p^2/2 + ...): 2 for A, 1 otherwise.
int quadratic_hamiltonian_index(Family family);

/// Eigenvalues of X, descending.
RealVector lax_spectrum(const RootDatum& datum, const TodaPoint& pt);

struct PhaseVelocity {
  RealVector dq;
  RealVector dp;
};

/// (dq, dp) = s^{-1} (dH/dp, -dH/dq) by central differences with step
/// 1e-6 * max(1, |pt|).
PhaseVelocity equations_of_motion(const RootDatum& datum, const TodaPoint& pt,
                                  int hamiltonian_index);

enum class FlowScheme {
  Midpoint,            // implicit midpoint, order 2
  MidpointTripleJump,  // symmetric composition of three midpoint substeps, order 4
};

/// Trajectory of length steps + 1. Each midpoint substep solves its implicit
/// equation by fixed-point iteration to 1e-12 * max(1, |y|); StepFailureError
/// if that takes more than 100 iterations or leaves the finite range.
std::vector<TodaPoint> integrate_flow(const RootDatum& datum, const TodaPoint& pt,
                                      int hamiltonian_index, double dt, int steps,
                                      FlowScheme scheme = FlowScheme::Midpoint);

}  // namespace todadual
