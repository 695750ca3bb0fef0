#include "test_util.hpp"

#include "todadual/errors.hpp"
#include "todadual/goldfish.hpp"
#include "todadual/poisson.hpp"
#include "todadual/sampling.hpp"

#include <doctest.h>

using namespace todadual;

namespace {

const PhaseFunction f_poly = [](const RealVector& q, const RealVector& p) {
  return q(0) * q(0) * p(1) + std::sin(q(1)) * p(0);
};
const PhaseFunction g_poly = [](const RealVector& q, const RealVector& p) {
  return std::exp(q(0) - q(1)) + p(0) * p(1) * p(1);
};
const PhaseFunction h_poly = [](const RealVector& q, const RealVector& p) {
  return q(1) * p(0) + std::cos(p(1));
};

}  // namespace

TEST_CASE("bracket axioms") {
  const RealVector q = (RealVector(2) << 0.4, -0.3).finished();
  const RealVector p = (RealVector(2) << 0.7, 0.2).finished();
  const double step = 1e-4;
  const double fg = poisson_bracket(1.0, f_poly, g_poly, q, p, step);
  const double gf = poisson_bracket(1.0, g_poly, f_poly, q, p, step);
  CHECK(std::abs(fg + gf) < 1e-12);
  CHECK(std::abs(poisson_bracket(1.0, f_poly, f_poly, q, p, step)) < 1e-12);

  // {f, g} by hand
  const double fq0 = 2 * q(0) * p(1), fq1 = std::cos(q(1)) * p(0), fp0 = std::sin(q(1)),
               fp1 = q(0) * q(0);
  const double gq0 = std::exp(q(0) - q(1)), gq1 = -gq0, gp0 = p(1) * p(1), gp1 = 2 * p(0) * p(1);
  const double exact = fq0 * gp0 + fq1 * gp1 - fp0 * gq0 - fp1 * gq1;
  CHECK(std::abs(fg - exact) < 1e-9);

  const PhaseFunction gh = [](const RealVector& x, const RealVector& y) {
    return g_poly(x, y) * h_poly(x, y);
  };
  const double lhs = poisson_bracket(1.0, f_poly, gh, q, p, step);
  const double rhs = poisson_bracket(1.0, f_poly, g_poly, q, p, step) * h_poly(q, p) +
                     g_poly(q, p) * poisson_bracket(1.0, f_poly, h_poly, q, p, step);
  CHECK(std::abs(lhs - rhs) < 1e-8);

  CHECK(std::abs(poisson_bracket(2.0, f_poly, g_poly, q, p, step) - 0.5 * fg) < 1e-14);
}

TEST_CASE("canonical pairs") {
  const RealVector q = RealVector::Zero(3), p = RealVector::Zero(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const PhaseFunction qi = [i](const RealVector& x, const RealVector&) { return x(i); };
      const PhaseFunction pj = [j](const RealVector&, const RealVector& y) { return y(j); };
      CHECK(std::abs(poisson_bracket(2.0, qi, pj, q, p, 1e-3) - (i == j ? 0.5 : 0.0)) < 1e-13);
    }
}

TEST_CASE("Hamiltonians Poisson-commute") {
  for (const auto& alg : testutil::algebras(4, 2)) {
    CAPTURE(testutil::label(alg));
    const RootDatum d = build_root_datum(alg);
    for (std::uint64_t t = 0; t < 3; ++t) {
      Sampler s(point_seed(89, t));
      const Eigen::MatrixXd toda = commutativity_matrix(d, ObservableFamily::Toda, s.toda_point(d), 1e-3);
      const Eigen::MatrixXd gold =
          commutativity_matrix(d, ObservableFamily::Goldfish, s.chamber_point(d), 1e-3);
      CHECK(toda.maxCoeff() < 1e-8);
      CHECK(gold.maxCoeff() < 1e-8);
      CHECK(toda.diagonal().norm() == 0.0);
    }
  }
}

TEST_CASE("mismatched observables and wall proximity") {
  const RootDatum a3 = build_root_datum(make_algebra(Family::A, 3));
  const GoldfishPoint near_wall{(RealVector(3) << 1.0, 0.9995, -1.0).finished(), RealVector::Zero(3)};
  CHECK_THROWS_AS(commutativity_matrix(a3, ObservableFamily::Goldfish, near_wall, 1e-3), ChamberError);
  const ObservableHandle h1{ObservableFamily::Toda, 1, a3.algebra};
  const ObservableHandle g1{ObservableFamily::Goldfish, 1, a3.algebra};
  const TodaPoint pt = Sampler(1).toda_point(a3);
  CHECK_THROWS(poisson_bracket(a3, h1, g1, pt, 1e-3));
  CHECK(poisson_bracket(a3, h1, h1, pt, 1e-3) == 0.0);
}
