#pragma once

#include "todadual/moser.hpp"
#include "todadual/rootsys.hpp"

namespace todadual {

struct GoldfishPoint {
  RealVector qhat;  // open Weyl chamber
  RealVector phat;
};

struct RSCoupling {
  double nu;
};

/// Throws ChamberError outside the open chamber or within 1e-8 of a wall.
void validate_goldfish_point(const RootDatum& datum, const GoldfishPoint& gp);

/// f_i in ahat_i^2 = exp(2 phat_i) f_i:
///   A: prod_{j>i} (q_i - q_j) prod_{l<i} 1/(q_l - q_i)
///   C: A-factor * prod_k (q_i + q_k)
///   B: C-factor * q_i
///   D: A-factor * prod_{k != i} (q_i + q_k)
RealVector variable_change_factors(const RootDatum& datum, const RealVector& qhat);

MoserPoint a_from_p(const RootDatum& datum, const GoldfishPoint& gp);
GoldfishPoint p_from_a(const RootDatum& datum, const MoserPoint& mp);

/// Closed-form Goldfish Hamiltonians Hhat_1..Hhat_kmax, normalized so that
/// Hhat_k = m_k(g g^dagger) at a_from_p(gp) for every type.
RealVector goldfish_hamiltonians(const RootDatum& datum, const GoldfishPoint& gp, int kmax);
double goldfish_hamiltonian(const RootDatum& datum, const GoldfishPoint& gp, int k);

/// Type A with signed denominators: sum_I prod_{i in I, j not in I} 1/(q_i - q_j) prod_I e^{2p}.
double goldfish_hamiltonian_A_signed(const GoldfishPoint& gp, int k);

/// Rational Ruijsenaars-Schneider Hamiltonian of type A.
double rs_hamiltonian_A(const GoldfishPoint& gp, RSCoupling coupling, int k);

/// The D-type Hhat_1 with an inner sum over j, as it is sometimes displayed:
/// sum_i 2 cosh(2 p_i) sum_{j != i} 1/(|q_i - q_j| |q_i + q_j|).
/// Agrees with goldfish_hamiltonian(D, gp, 1) only for rank 2.
double printed_d_h1(const GoldfishPoint& gp);

}  // namespace todadual
