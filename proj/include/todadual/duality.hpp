#pragma once

#include "todadual/goldfish.hpp"
#include "todadual/moser.hpp"
#include "todadual/toda.hpp"

namespace todadual {

/// Moser-gauge representative of a Toda point.
struct MoserImage {
  RealVector qhat;
  ComplexMatrix k;  // k X k^{-1} = diagonal pattern
  ComplexMatrix g;  // lower-triangular, torus-normalized
  MoserPoint moser;
  GoldfishPoint goldfish;
  double momentum_residual;
};

/// Throws NonGenericPointError (or a subclass) when the spectrum is
/// degenerate, the Gauss decomposition fails or a diagonal entry vanishes.
MoserImage toda_to_moser_gauge(const RootDatum& datum, const TodaPoint& pt);

GoldfishPoint toda_to_goldfish(const RootDatum& datum, const TodaPoint& pt);

TodaPoint goldfish_to_toda(const RootDatum& datum, const GoldfishPoint& gp);

struct DualityReport {
  RealVector toda_values;      // H_k at the Toda point
  RealVector goldfish_values;  // closed-form Hhat_k at the image
  RealVector jk_toda_gauge;    // m_k(g g^dagger), Toda gauge
  RealVector mk_moser_gauge;   // m_k(g g^dagger), Moser gauge
  RealVector ik_moser_gauge;   // H_k evaluated on the diagonal pattern of qhat
  double max_relative_mismatch;
};

/// Compares both families of invariants across the two gauges. Mismatches
/// are reported, not thrown; errors of the duality map itself propagate.
DualityReport verify_duality_identities(const RootDatum& datum, const TodaPoint& pt, int kmax);

struct SymplecticCheck {
  double residual;  // min over sigma of |J^T Omega J - sigma Omega|_F, scaled
  int sigma;
};

/// Jacobian of (q, p) -> (qhat, phat) by central differences. Omega is
/// [[0, 1], [-1, 0]] on both sides, multiplied by the reduced-form scale.
SymplecticCheck symplectomorphism_check(const RootDatum& datum, const TodaPoint& pt, double step);

}  // namespace todadual
