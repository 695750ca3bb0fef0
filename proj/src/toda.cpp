#include "todadual/toda.hpp"

#include "todadual/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace todadual {

namespace {

constexpr int kMaxFixedPointIterations = 100;
constexpr double kFixedPointTolerance = 1e-12;
// The vector field is a finite difference, so iterates can stall at its
// rounding noise. A stalled iteration below this level counts as converged.
constexpr double kNoiseFloor = 1e-9;

void check_kmax(const RootDatum& datum, int kmax) {
  if (kmax < 1 || kmax > datum.rank()) {
    throw std::invalid_argument("kmax must be in [1, " + std::to_string(datum.rank()) + "], got " +
                                std::to_string(kmax));
  }
}

Eigen::MatrixXd real_lax(const RootDatum& datum, const TodaPoint& pt) {
  const int N = datum.dim();
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(N, N);
  const RealVector diag = cartan_diagonal(datum, pt.p);
  x.diagonal() = diag;
  for (const auto& root : datum.simple_roots) {
    const double c = std::exp(root.weight.dot(pt.q));
    x += c * (root.raising + root.lowering).real();
  }
  return x;
}

RealVector hamiltonians_real(Family family, const Eigen::MatrixXd& x, int kmax) {
  RealVector h(kmax);
  const bool even = family != Family::A;
  const Eigen::MatrixXd step = even ? Eigen::MatrixXd(x * x) : x;
  Eigen::MatrixXd power = step;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) power = power * step;
    h(k - 1) = even ? power.trace() / (4.0 * k) : power.trace() / k;
  }
  return h;
}

double single_hamiltonian(const RootDatum& datum, const TodaPoint& pt, int index) {
  return hamiltonians_real(datum.family(), real_lax(datum, pt), index)(index - 1);
}

double point_norm(const TodaPoint& pt) {
  return std::sqrt(pt.q.squaredNorm() + pt.p.squaredNorm());
}

RealVector stack(const TodaPoint& pt) {
  RealVector y(pt.q.size() * 2);
  y << pt.q, pt.p;
  return y;
}

TodaPoint unstack(const RealVector& y) {
  const auto n = y.size() / 2;
  return TodaPoint{y.head(n), y.tail(n)};
}

RealVector velocity(const RootDatum& datum, const RealVector& y, int index) {
  const PhaseVelocity v = equations_of_motion(datum, unstack(y), index);
  RealVector out(y.size());
  out << v.dq, v.dp;
  return out;
}

RealVector midpoint_step(const RootDatum& datum, const RealVector& y, int index, double h,
                         int step) {
  auto fail = [step]() {
    return StepFailureError("implicit midpoint did not converge at step " + std::to_string(step));
  };
  RealVector next = y + h * velocity(datum, y, index);
  double previous = std::numeric_limits<double>::infinity();
  for (int it = 0; it < kMaxFixedPointIterations; ++it) {
    if (!next.allFinite()) throw fail();
    const RealVector updated = y + h * velocity(datum, 0.5 * (y + next), index);
    if (!updated.allFinite()) throw fail();
    const double change = (updated - next).norm();
    const double scale = std::max(1.0, updated.norm());
    next = updated;
    if (change <= kFixedPointTolerance * scale) return next;
    if (change >= 0.5 * previous && change <= kNoiseFloor * scale) return next;
    previous = change;
  }
  throw fail();
}

}  // namespace

void validate_toda_point(const RootDatum& datum, const TodaPoint& pt) {
  if (pt.q.size() != datum.rank() || pt.p.size() != datum.rank()) {
    throw std::invalid_argument("Toda point must have " + std::to_string(datum.rank()) +
                                " positions and momenta");
  }
  if (!pt.q.allFinite() || !pt.p.allFinite()) {
    throw std::invalid_argument("Toda point has non-finite entries");
  }
}

LaxPair build_lax(const RootDatum& datum, const TodaPoint& pt) {
  validate_toda_point(datum, pt);
  LaxPair out;
  const RealVector logs = cartan_diagonal(datum, pt.q);
  out.g = logs.array().exp().matrix().cast<Complex>().asDiagonal();
  out.X = real_lax(datum, pt).cast<Complex>();
  return out;
}

RealVector toda_hamiltonians(const RootDatum& datum, const TodaPoint& pt, int kmax) {
  validate_toda_point(datum, pt);
  check_kmax(datum, kmax);
  return hamiltonians_real(datum.family(), real_lax(datum, pt), kmax);
}

RealVector toda_hamiltonians_from_lax(const RootDatum& datum, const ComplexMatrix& x, int kmax) {
  check_kmax(datum, kmax);
  if (x.rows() != datum.dim() || x.cols() != datum.dim()) {
    throw std::invalid_argument("Lax matrix size does not match the algebra");
  }
  RealVector h(kmax);
  const bool even = datum.family() != Family::A;
  const ComplexMatrix step = even ? ComplexMatrix(x * x) : x;
  ComplexMatrix power = step;
  for (int k = 1; k <= kmax; ++k) {
    if (k > 1) power = power * step;
    const Complex tr = power.trace();
    if (std::abs(tr.imag()) > 1e-10 * std::max(1.0, std::abs(tr))) {
      throw StructuralError("Lax matrix has a non-real trace power");
    }
    h(k - 1) = even ? tr.real() / (4.0 * k) : tr.real() / k;
  }
  return h;
}

RealVector toda_hamiltonian_scales(const RootDatum& datum, const RealVector& spectrum, int kmax) {
  check_kmax(datum, kmax);
  const bool even = datum.family() != Family::A;
  RealVector s(kmax);
  for (int k = 1; k <= kmax; ++k) {
    const double power = even ? 2.0 * k : k;
    s(k - 1) = spectrum.array().abs().pow(power).sum() / (even ? 4.0 * k : k);
  }
  return s;
}

int quadratic_hamiltonian_index(Family family) { return family == Family::A ? 2 : 1; }

RealVector lax_spectrum(const RootDatum& datum, const TodaPoint& pt) {
  validate_toda_point(datum, pt);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(real_lax(datum, pt),
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

PhaseVelocity equations_of_motion(const RootDatum& datum, const TodaPoint& pt,
                                  int hamiltonian_index) {
  validate_toda_point(datum, pt);
  check_kmax(datum, hamiltonian_index);
  const int n = datum.rank();
  const double h = 1e-6 * std::max(1.0, point_norm(pt));
  const double s = reduced_form(datum.family()).scale;
  PhaseVelocity v{RealVector(n), RealVector(n)};
  TodaPoint probe = pt;
  for (int i = 0; i < n; ++i) {
    probe.p(i) = pt.p(i) + h;
    const double hp = single_hamiltonian(datum, probe, hamiltonian_index);
    probe.p(i) = pt.p(i) - h;
    const double hm = single_hamiltonian(datum, probe, hamiltonian_index);
    probe.p(i) = pt.p(i);
    v.dq(i) = (hp - hm) / (2.0 * h) / s;

    probe.q(i) = pt.q(i) + h;
    const double qp = single_hamiltonian(datum, probe, hamiltonian_index);
    probe.q(i) = pt.q(i) - h;
    const double qm = single_hamiltonian(datum, probe, hamiltonian_index);
    probe.q(i) = pt.q(i);
    v.dp(i) = -(qp - qm) / (2.0 * h) / s;
  }
  return v;
}

std::vector<TodaPoint> integrate_flow(const RootDatum& datum, const TodaPoint& pt,
                                      int hamiltonian_index, double dt, int steps,
                                      FlowScheme scheme) {
  validate_toda_point(datum, pt);
  check_kmax(datum, hamiltonian_index);
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  if (!std::isfinite(dt) || !std::isfinite(dt * steps)) {
    throw std::invalid_argument("dt * steps must be finite");
  }
  std::vector<TodaPoint> trajectory;
  trajectory.reserve(static_cast<std::size_t>(steps) + 1);
  trajectory.push_back(pt);
  if (dt == 0.0) {
    trajectory.resize(static_cast<std::size_t>(steps) + 1, pt);
    return trajectory;
  }

  std::vector<double> substeps{dt};
  if (scheme == FlowScheme::MidpointTripleJump) {
    const double cbrt2 = std::cbrt(2.0);
    const double outer = 1.0 / (2.0 - cbrt2);
    substeps = {outer * dt, -cbrt2 * outer * dt, outer * dt};
  }

  RealVector y = stack(pt);
  for (int step = 0; step < steps; ++step) {
    for (double h : substeps) y = midpoint_step(datum, y, hamiltonian_index, h, step + 1);
    trajectory.push_back(unstack(y));
  }
  return trajectory;
}

}  // namespace todadual
