#pragma once

#include "todadual/goldfish.hpp"
#include "todadual/toda.hpp"

#include <functional>
#include <variant>

namespace todadual {

enum class ObservableFamily { Toda, Goldfish };

struct ObservableHandle {
  ObservableFamily family;
  int index;
  AlgebraType algebra;
};

using PhasePoint = std::variant<TodaPoint, GoldfishPoint>;

/// Scalar function of (positions, momenta).
using PhaseFunction = std::function<double(const RealVector&, const RealVector&)>;

/// Central-difference gradient (d/dq, d/dp) with one Richardson step
/// (h and h/2).
RealVector phase_gradient(const PhaseFunction& f, const RealVector& q, const RealVector& p,
                          double step);

/// s^{-1} sum_i (df/dq_i dg/dp_i - df/dp_i dg/dq_i) for gradients laid out as (q, p).
double bracket_from_gradients(double scale, const RealVector& grad_f, const RealVector& grad_g);

double poisson_bracket(double scale, const PhaseFunction& f, const PhaseFunction& g,
                       const RealVector& q, const RealVector& p, double step);

/// Bracket of two Hamiltonians of the same family. The point must belong to
/// that family; Goldfish points closer than 2 * step to a chamber wall are
/// rejected with ChamberError.
double poisson_bracket(const RootDatum& datum, const ObservableHandle& f,
                       const ObservableHandle& g, const PhasePoint& point, double step);

/// |{H_j, H_k}| / (|grad H_j| |grad H_k|) for all pairs of the family.
Eigen::MatrixXd commutativity_matrix(const RootDatum& datum, ObservableFamily family,
                                     const PhasePoint& point, double step);

}  // namespace todadual
