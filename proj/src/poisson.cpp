#include "todadual/poisson.hpp"

#include "todadual/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace todadual {

namespace {

struct PhaseCoordinates {
  RealVector q;
  RealVector p;
};

PhaseCoordinates coordinates(const RootDatum& datum, ObservableFamily family,
                             const PhasePoint& point, double step) {
  if (family == ObservableFamily::Toda) {
    const auto* pt = std::get_if<TodaPoint>(&point);
    if (!pt) throw std::invalid_argument("Toda observables need a Toda point");
    validate_toda_point(datum, *pt);
    return {pt->q, pt->p};
  }
  const auto* gp = std::get_if<GoldfishPoint>(&point);
  if (!gp) throw std::invalid_argument("Goldfish observables need a Goldfish point");
  validate_goldfish_point(datum, *gp);
  if (chamber_margin(datum.family(), gp->qhat) <= 2.0 * step) {
    throw ChamberError("Goldfish point too close to a chamber wall for the difference stencil");
  }
  return {gp->qhat, gp->phat};
}

PhaseFunction observable(const RootDatum& datum, ObservableFamily family, int index) {
  if (index < 1 || index > datum.rank()) {
    throw std::invalid_argument("observable index out of range: " + std::to_string(index));
  }
  if (family == ObservableFamily::Toda) {
    return [&datum, index](const RealVector& q, const RealVector& p) {
      return toda_hamiltonians(datum, TodaPoint{q, p}, index)(index - 1);
    };
  }
  return [&datum, index](const RealVector& q, const RealVector& p) {
    return goldfish_hamiltonian(datum, GoldfishPoint{q, p}, index);
  };
}

void check_handle(const RootDatum& datum, const ObservableHandle& h) {
  if (h.algebra.family != datum.family() || h.algebra.rank != datum.rank()) {
    throw std::invalid_argument("observable belongs to a different algebra");
  }
}

}  // namespace

RealVector phase_gradient(const PhaseFunction& f, const RealVector& q, const RealVector& p,
                          double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  const auto n = q.size();
  RealVector y(2 * n);
  y << q, p;
  auto eval = [&](const RealVector& z) { return f(z.head(n), z.tail(n)); };
  auto central = [&](Eigen::Index i, double h) {
    RealVector plus = y, minus = y;
    plus(i) += h;
    minus(i) -= h;
    return (eval(plus) - eval(minus)) / (2.0 * h);
  };
  RealVector grad(2 * n);
  for (Eigen::Index i = 0; i < 2 * n; ++i) {
    const double coarse = central(i, step);
    const double fine = central(i, 0.5 * step);
    grad(i) = (4.0 * fine - coarse) / 3.0;
  }
  return grad;
}

double bracket_from_gradients(double scale, const RealVector& grad_f, const RealVector& grad_g) {
  const auto n = grad_f.size() / 2;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    sum += grad_f(i) * grad_g(n + i) - grad_f(n + i) * grad_g(i);
  }
  return sum / scale;
}

double poisson_bracket(double scale, const PhaseFunction& f, const PhaseFunction& g,
                       const RealVector& q, const RealVector& p, double step) {
  return bracket_from_gradients(scale, phase_gradient(f, q, p, step),
                                phase_gradient(g, q, p, step));
}

double poisson_bracket(const RootDatum& datum, const ObservableHandle& f,
                       const ObservableHandle& g, const PhasePoint& point, double step) {
  check_handle(datum, f);
  check_handle(datum, g);
  if (f.family != g.family) throw std::invalid_argument("observables of different families");
  const PhaseCoordinates c = coordinates(datum, f.family, point, step);
  const PhaseFunction ff = observable(datum, f.family, f.index);
  const PhaseFunction gg = observable(datum, g.family, g.index);
  if (f.index == g.index) return 0.0;
  return poisson_bracket(reduced_form(datum.family()).scale, ff, gg, c.q, c.p, step);
}

Eigen::MatrixXd commutativity_matrix(const RootDatum& datum, ObservableFamily family,
                                     const PhasePoint& point, double step) {
  const PhaseCoordinates c = coordinates(datum, family, point, step);
  const int n = datum.rank();
  const double scale = reduced_form(datum.family()).scale;
  std::vector<RealVector> grads;
  for (int k = 1; k <= n; ++k) grads.push_back(phase_gradient(observable(datum, family, k), c.q, c.p, step));
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const double norm = grads[j].norm() * grads[k].norm();
      const double value = std::abs(bracket_from_gradients(scale, grads[j], grads[k]));
      out(j, k) = out(k, j) = norm > 0.0 ? value / norm : value;
    }
  }
  return out;
}

}  // namespace todadual
