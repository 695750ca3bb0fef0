#include "todadual/goldfish.hpp"

#include "todadual/combinatorics.hpp"
#include "todadual/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace todadual {

namespace {

constexpr double kPoleGuard = 1e-8;

struct TermContext {
  const RealVector& q;
  RealVector e_plus;   // exp(2 p)
  RealVector e_minus;  // exp(-2 p)
  int n;
};

// Product over i in I of e^{2p_i} / (prod_{m not in I} |q_i - q_m| prod_{m not in J} |q_i + q_m|)
// and over j in J of e^{-2p_j} / (prod_{m not in I} |q_j + q_m| prod_{m not in J} |q_j - q_m|).
double signed_pair_term(const TermContext& c, const std::vector<int>& I, const std::vector<int>& J,
                        const std::vector<bool>& in_i, const std::vector<bool>& in_j) {
  double t = 1.0;
  for (int i : I) {
    double d = 1.0;
    for (int m = 0; m < c.n; ++m) {
      if (!in_i[m]) d *= std::abs(c.q(i) - c.q(m));
      if (!in_j[m]) d *= std::abs(c.q(i) + c.q(m));
    }
    t *= c.e_plus(i) / d;
  }
  for (int j : J) {
    double d = 1.0;
    for (int m = 0; m < c.n; ++m) {
      if (!in_i[m]) d *= std::abs(c.q(j) + c.q(m));
      if (!in_j[m]) d *= std::abs(c.q(j) - c.q(m));
    }
    t *= c.e_minus(j) / d;
  }
  return t;
}

// Sum over pairs (I, J) of subsets of the particles with |I| + |J| = k.
template <class F>
double sum_over_pairs(int n, int k, F&& term) {
  double total = 0.0;
  for (int s = 0; s <= k; ++s) {
    if (s > n || k - s > n) continue;
    for_each_combination(n, s, [&](const std::vector<int>& I) {
      const auto in_i = subset_mask(n, I);
      for_each_combination(n, k - s, [&](const std::vector<int>& J) {
        total += term(I, J, in_i, subset_mask(n, J));
      });
    });
  }
  return total;
}

double hamiltonian_a(const RealVector& q, const RealVector& e_plus, int k, bool modulus) {
  const int n = static_cast<int>(q.size());
  double total = 0.0;
  for_each_combination(n, k, [&](const std::vector<int>& I) {
    const auto in_i = subset_mask(n, I);
    double t = 1.0;
    for (int i : I) {
      t *= e_plus(i);
      for (int j = 0; j < n; ++j)
        if (!in_i[j]) t /= modulus ? std::abs(q(i) - q(j)) : q(i) - q(j);
    }
    total += t;
  });
  return total;
}

double hamiltonian_b(const TermContext& c, int k) {
  const auto& q = c.q;
  double total = sum_over_pairs(c.n, k, [&](const auto& I, const auto& J, const auto& in_i,
                                            const auto& in_j) {
    double t = signed_pair_term(c, I, J, in_i, in_j);
    for (int i : I) t /= std::abs(q(i));
    for (int j : J) t /= std::abs(q(j));
    return t;
  });
  total += sum_over_pairs(c.n, k - 1, [&](const auto& I, const auto& J, const auto& in_i,
                                          const auto& in_j) {
    double t = signed_pair_term(c, I, J, in_i, in_j);
    for (int m = 0; m < c.n; ++m) {
      if (!in_i[m]) t /= std::abs(q(m));
      if (!in_j[m]) t /= std::abs(q(m));
    }
    return t;
  });
  return total;
}

double hamiltonian_d(const TermContext& c, int k) {
  const auto& q = c.q;
  const int n = c.n;
  if (k < n) {
    return std::ldexp(1.0, k) *
           sum_over_pairs(n, k, [&](const auto& I, const auto& J, const auto& in_i,
                                    const auto& in_j) {
             double t = signed_pair_term(c, I, J, in_i, in_j);
             for (int i : I) t *= std::abs(q(i));
             for (int j : J) t *= std::abs(q(j));
             return t;
           });
  }
  return std::ldexp(1.0, n - 2) *
         sum_over_pairs(n, n, [&](const auto& I, const auto& J, const auto& in_i,
                                  const auto& in_j) {
           double t = signed_pair_term(c, I, J, in_i, in_j);
           for (int i : I) t /= std::abs(q(i));
           for (int j : J) t *= std::abs(q(j));
           double prod_i = 1.0;
           for (int i : I) prod_i *= q(i);
           double prod_rest = 1.0;
           for (int m = 0; m < n; ++m)
             if (!in_j[m]) prod_rest *= q(m);
           const double bracket = prod_i + (I.size() % 2 == 0 ? 1.0 : -1.0) * prod_rest;
           return t * bracket * bracket;
         });
}

void check_index(const RootDatum& datum, int k) {
  if (k < 1 || k > datum.rank()) {
    throw std::invalid_argument("Hamiltonian index must be in [1, " +
                                std::to_string(datum.rank()) + "], got " + std::to_string(k));
  }
}

void validate_a_point(const GoldfishPoint& gp) {
  if (gp.qhat.size() == 0 || gp.qhat.size() != gp.phat.size()) {
    throw std::invalid_argument("Goldfish point: qhat and phat must have equal nonzero length");
  }
  if (!gp.qhat.allFinite() || !gp.phat.allFinite()) {
    throw std::invalid_argument("Goldfish point has non-finite entries");
  }
  const double margin = chamber_margin(Family::A, gp.qhat);
  if (margin <= 0.0) throw ChamberError("qhat outside the open Weyl chamber");
  if (margin < kPoleGuard) throw ChamberError("qhat within 1e-8 of a chamber wall");
}

}  // namespace

void validate_goldfish_point(const RootDatum& datum, const GoldfishPoint& gp) {
  const int n = datum.rank();
  if (gp.qhat.size() != n || gp.phat.size() != n) {
    throw std::invalid_argument("Goldfish point must have " + std::to_string(n) + " coordinates");
  }
  if (!gp.qhat.allFinite() || !gp.phat.allFinite()) {
    throw std::invalid_argument("Goldfish point has non-finite entries");
  }
  const double margin = chamber_margin(datum.family(), gp.qhat);
  if (margin <= 0.0) throw ChamberError("qhat outside the open Weyl chamber");
  if (margin < kPoleGuard) throw ChamberError("qhat within 1e-8 of a chamber wall");
}

RealVector variable_change_factors(const RootDatum& datum, const RealVector& qhat) {
  const int n = datum.rank();
  if (qhat.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " spectral coordinates");
  }
  RealVector f(n);
  for (int i = 0; i < n; ++i) {
    double v = 1.0;
    for (int j = i + 1; j < n; ++j) v *= qhat(i) - qhat(j);
    for (int l = 0; l < i; ++l) v /= qhat(l) - qhat(i);
    switch (datum.family()) {
      case Family::A:
        break;
      case Family::B:
        v *= qhat(i);
        [[fallthrough]];
      case Family::C:
        for (int k = 0; k < n; ++k) v *= qhat(i) + qhat(k);
        break;
      case Family::D:
        for (int k = 0; k < n; ++k)
          if (k != i) v *= qhat(i) + qhat(k);
        break;
    }
    f(i) = v;
  }
  return f;
}

MoserPoint a_from_p(const RootDatum& datum, const GoldfishPoint& gp) {
  validate_goldfish_point(datum, gp);
  const RealVector f = variable_change_factors(datum, gp.qhat);
  if ((f.array() <= 0.0).any()) throw ChamberError("nonpositive variable-change factor");
  MoserPoint mp;
  mp.qhat = gp.qhat;
  mp.ahat = (gp.phat.array().exp() * f.array().sqrt()).matrix();
  return mp;
}

GoldfishPoint p_from_a(const RootDatum& datum, const MoserPoint& mp) {
  validate_moser_point(datum, mp);
  const RealVector f = variable_change_factors(datum, mp.qhat);
  if ((f.array() <= 0.0).any()) throw ChamberError("nonpositive variable-change factor");
  GoldfishPoint gp;
  gp.qhat = mp.qhat;
  gp.phat = (mp.ahat.array().log() - 0.5 * f.array().log()).matrix();
  return gp;
}

double goldfish_hamiltonian(const RootDatum& datum, const GoldfishPoint& gp, int k) {
  validate_goldfish_point(datum, gp);
  check_index(datum, k);
  const int n = datum.rank();
  TermContext c{gp.qhat, (2.0 * gp.phat).array().exp().matrix(),
                (-2.0 * gp.phat).array().exp().matrix(), n};
  switch (datum.family()) {
    case Family::A:
      return hamiltonian_a(gp.qhat, c.e_plus, k, true);
    case Family::C:
      return sum_over_pairs(n, k, [&](const auto& I, const auto& J, const auto& in_i,
                                      const auto& in_j) {
        return signed_pair_term(c, I, J, in_i, in_j);
      });
    case Family::B:
      return hamiltonian_b(c, k);
    case Family::D:
      if (std::abs(gp.qhat(n - 1)) < kPoleGuard) {
        throw ChamberError("closed-form D Hamiltonians need |qhat_n| >= 1e-8");
      }
      return hamiltonian_d(c, k);
  }
  return 0.0;
}

RealVector goldfish_hamiltonians(const RootDatum& datum, const GoldfishPoint& gp, int kmax) {
  check_index(datum, kmax);
  RealVector h(kmax);
  for (int k = 1; k <= kmax; ++k) h(k - 1) = goldfish_hamiltonian(datum, gp, k);
  return h;
}

double goldfish_hamiltonian_A_signed(const GoldfishPoint& gp, int k) {
  validate_a_point(gp);
  const auto n = static_cast<int>(gp.qhat.size());
  if (k < 1 || k > n) throw std::invalid_argument("Hamiltonian index out of range");
  return hamiltonian_a(gp.qhat, (2.0 * gp.phat).array().exp().matrix(), k, false);
}

double rs_hamiltonian_A(const GoldfishPoint& gp, RSCoupling coupling, int k) {
  validate_a_point(gp);
  const auto n = static_cast<int>(gp.qhat.size());
  if (k < 1 || k > n) throw std::invalid_argument("Hamiltonian index out of range");
  if (!(coupling.nu > 0.0) || !std::isfinite(coupling.nu)) {
    throw std::invalid_argument("coupling nu must be positive and finite");
  }
  const RealVector& q = gp.qhat;
  double total = 0.0;
  for_each_combination(n, k, [&](const std::vector<int>& I) {
    const auto in_i = subset_mask(n, I);
    double t = 1.0;
    for (int i : I) {
      t *= std::exp(2.0 * gp.phat(i));
      for (int j = 0; j < n; ++j) {
        if (in_i[j]) continue;
        const double shifted = q(i) - q(j) + coupling.nu;
        if (std::abs(shifted) < kPoleGuard * std::max(1.0, coupling.nu)) {
          throw ChamberError("q_i - q_j = -nu for a contributing pair");
        }
        t *= shifted / (q(i) - q(j));
      }
    }
    total += t;
  });
  return total;
}

double printed_d_h1(const GoldfishPoint& gp) {
  const auto n = static_cast<int>(gp.qhat.size());
  if (n < 2 || gp.phat.size() != n) throw std::invalid_argument("printed_d_h1: need rank >= 2");
  if (chamber_margin(Family::D, gp.qhat) < kPoleGuard) {
    throw ChamberError("qhat outside the open Weyl chamber");
  }
  const RealVector& q = gp.qhat;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double inner = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != i) inner += 1.0 / (std::abs(q(i) - q(j)) * std::abs(q(i) + q(j)));
    total += 2.0 * std::cosh(2.0 * gp.phat(i)) * inner;
  }
  return total;
}

}  // namespace todadual
