#include "todadual/duality.hpp"

#include "todadual/errors.hpp"
#include "todadual/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace todadual {

namespace {

constexpr double kChamberGap = 1e-8;
constexpr double kDiagonalFloor = 1e-12;
constexpr double kMomentumTolerance = 1e-8;

// Torus element of K with first n diagonal entries `phases`.
Eigen::VectorXcd torus(const RootDatum& datum, const Eigen::VectorXcd& phases) {
  const int n = datum.rank();
  const int N = datum.dim();
  Eigen::VectorXcd t(N);
  t.head(n) = phases;
  if (datum.family() == Family::B) t(n) = 1.0;
  if (datum.family() != Family::A) t.tail(n) = phases.reverse().cwiseInverse();
  return t;
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

MoserImage toda_to_moser_gauge(const RootDatum& datum, const TodaPoint& pt) {
  const LaxPair lax = build_lax(datum, pt);
  const Diagonalization diag = structured_diagonalize(datum, lax.X);
  if (chamber_margin(datum.family(), diag.qhat) < kChamberGap) {
    throw ChamberError("spectral image within 1e-8 of a chamber wall");
  }
  const GaussFactors gauss = lower_triangularize(datum, lax.g * diag.k.adjoint());

  const int n = datum.rank();
  Eigen::VectorXcd phases(n);
  for (int i = 0; i < n; ++i) {
    const Complex d = gauss.glow(i, i);
    if (std::abs(d) < kDiagonalFloor) {
      throw NonGenericPointError("vanishing diagonal entry in the Moser gauge");
    }
    phases(i) = d / std::abs(d);
  }
  // g' -> g' t^{-1}; also k -> t k keeps k X k^{-1} unchanged
  const Eigen::VectorXcd t = torus(datum, phases);
  MoserImage out;
  out.qhat = diag.qhat;
  out.g = gauss.glow * t.cwiseInverse().asDiagonal();
  out.k = t.asDiagonal() * diag.k;
  out.moser.qhat = diag.qhat;
  out.moser.ahat = out.g.diagonal().head(n).real();

  out.momentum_residual = moser_momentum_residual(datum, out.g, out.qhat);
  const double scale = std::max(1.0, out.qhat.cwiseAbs().maxCoeff());
  if (out.momentum_residual > kMomentumTolerance * scale) {
    throw ConsistencyError("Moser-gauge momentum residual " +
                           std::to_string(out.momentum_residual) + " above tolerance");
  }
  out.goldfish = p_from_a(datum, out.moser);
  return out;
}

GoldfishPoint toda_to_goldfish(const RootDatum& datum, const TodaPoint& pt) {
  return toda_to_moser_gauge(datum, pt).goldfish;
}

TodaPoint goldfish_to_toda(const RootDatum& datum, const GoldfishPoint& gp) {
  const MoserPoint mp = a_from_p(datum, gp);
  const ComplexMatrix g = build_moser_g(datum, mp);
  const ComplexMatrix x = cartan_diagonal(datum, gp.qhat).cast<Complex>().asDiagonal();
  const IwasawaFactors f = iwasawa(datum, g);
  // (g, X) ~ (n^{-1} g k^{-1}, k X k^{-1}) = (a, X_toda)
  const ComplexMatrix x_toda = f.k * x * f.k.adjoint();
  const int n = datum.rank();
  TodaPoint pt{RealVector(n), RealVector(n)};
  for (int i = 0; i < n; ++i) {
    pt.q(i) = std::log(f.a(i));
    const ComplexMatrix& h = datum.cartan[i];
    pt.p(i) = (x_toda * h).trace().real() / (h * h).trace().real();
  }
  return pt;
}

DualityReport verify_duality_identities(const RootDatum& datum, const TodaPoint& pt, int kmax) {
  DualityReport r;
  r.toda_values = toda_hamiltonians(datum, pt, kmax);
  const MoserImage image = toda_to_moser_gauge(datum, pt);
  r.goldfish_values = goldfish_hamiltonians(datum, image.goldfish, kmax);

  const RealVector logs = cartan_diagonal(datum, pt.q);
  r.jk_toda_gauge.resize(kmax);
  r.mk_moser_gauge.resize(kmax);
  for (int k = 1; k <= kmax; ++k) {
    r.jk_toda_gauge(k - 1) = std::exp(2.0 * logs.tail(k).sum());
    r.mk_moser_gauge(k - 1) = minor_oracle_mk(image.g, k);
  }
  const ComplexMatrix x_diag = cartan_diagonal(datum, image.qhat).cast<Complex>().asDiagonal();
  r.ik_moser_gauge = toda_hamiltonians_from_lax(datum, x_diag, kmax);

  const RealVector scales = toda_hamiltonian_scales(datum, lax_spectrum(datum, pt), kmax);
  double worst = 0.0;
  for (int k = 0; k < kmax; ++k) {
    worst = std::max(worst, relative_gap(r.jk_toda_gauge(k), r.mk_moser_gauge(k)));
    worst = std::max(worst, relative_gap(r.jk_toda_gauge(k), r.goldfish_values(k)));
    if (scales(k) > 0.0) {
      worst = std::max(worst, std::abs(r.toda_values(k) - r.ik_moser_gauge(k)) / scales(k));
    }
  }
  r.max_relative_mismatch = worst;
  return r;
}

SymplecticCheck symplectomorphism_check(const RootDatum& datum, const TodaPoint& pt, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  const int n = datum.rank();
  RealVector z(2 * n);
  z << pt.q, pt.p;
  auto image = [&](const RealVector& y) {
    const GoldfishPoint gp = toda_to_goldfish(datum, TodaPoint{y.head(n), y.tail(n)});
    RealVector out(2 * n);
    out << gp.qhat, gp.phat;
    return out;
  };
  Eigen::MatrixXd jac(2 * n, 2 * n);
  for (int c = 0; c < 2 * n; ++c) {
    RealVector plus = z, minus = z;
    plus(c) += step;
    minus(c) -= step;
    jac.col(c) = (image(plus) - image(minus)) / (2.0 * step);
  }
  const double s = reduced_form(datum.family()).scale;
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n).setIdentity();
  omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  omega *= s;
  const Eigen::MatrixXd pulled = jac.transpose() * omega * jac;
  const double plus = (pulled - omega).norm();
  const double minus = (pulled + omega).norm();
  return plus <= minus ? SymplecticCheck{plus, 1} : SymplecticCheck{minus, -1};
}

}  // namespace todadual
