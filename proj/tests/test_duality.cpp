#include "oracles.hpp"
#include "test_util.hpp"

#include "todadual/duality.hpp"
#include "todadual/errors.hpp"
#include "todadual/sampling.hpp"

#include <doctest.h>

using namespace todadual;

namespace {

TodaPoint two(double q1, double q2, double p1, double p2) {
  return {(RealVector(2) << q1, q2).finished(), (RealVector(2) << p1, p2).finished()};
}

}  // namespace

TEST_CASE("Toda to Goldfish, two particles") {
  const RootDatum a2 = build_root_datum(make_algebra(Family::A, 2));
  const GoldfishPoint gp = toda_to_goldfish(a2, two(0, 0, 1, -1));
  CHECK(gp.qhat(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(gp.qhat(1) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));

  const double a = 0.7, dq = 0.4;
  const GoldfishPoint eq = toda_to_goldfish(a2, two(dq, 0, a, a));
  const double r = std::exp(dq);
  CHECK(eq.qhat(0) == doctest::Approx(a + r).epsilon(1e-13));
  CHECK(eq.qhat(1) == doctest::Approx(a - r).epsilon(1e-13));
}

TEST_CASE("rank one") {
  const RootDatum a1 = build_root_datum(make_algebra(Family::A, 1));
  const TodaPoint pt{(RealVector(1) << 0.35).finished(), (RealVector(1) << -0.8).finished()};
  const GoldfishPoint gp = toda_to_goldfish(a1, pt);
  CHECK(gp.qhat(0) == doctest::Approx(-0.8).epsilon(1e-15));
  CHECK(gp.phat(0) == doctest::Approx(0.35).epsilon(1e-15));
  const TodaPoint back = goldfish_to_toda(a1, gp);
  CHECK(std::abs(back.q(0) - 0.35) < 1e-15);
}

TEST_CASE("gauge invariants and round trip") {
  for (const auto& alg : testutil::algebras(4)) {
    CAPTURE(testutil::label(alg));
    const RootDatum d = build_root_datum(alg);
    for (std::uint64_t t = 0; t < 10; ++t) {
      const TodaPoint pt = Sampler(point_seed(73, t)).toda_point(d);
      const MoserImage image = toda_to_moser_gauge(d, pt);
      CHECK(chamber_margin(alg.family, image.qhat) > 1e-8);
      CHECK(image.momentum_residual < 1e-9);
      CHECK((image.moser.ahat.array() > 0).all());
      CHECK(image.g.imag().norm() < 1e-9 * image.g.norm());

      const DualityReport r = verify_duality_identities(d, pt, alg.rank);
      CHECK(r.max_relative_mismatch < 1e-7);
      for (int k = 0; k < alg.rank; ++k) {
        CHECK(testutil::relative(r.jk_toda_gauge(k), r.goldfish_values(k)) < 1e-7);
      }
      const TodaPoint back = goldfish_to_toda(d, image.goldfish);
      CHECK((back.q - pt.q).cwiseAbs().maxCoeff() < 1e-7);
      CHECK((back.p - pt.p).cwiseAbs().maxCoeff() < 1e-7);
    }
  }
}

TEST_CASE("A-type Toda-gauge minors") {
  const RootDatum a2 = build_root_datum(make_algebra(Family::A, 2));
  const TodaPoint pt = two(0.3, -0.5, 0.2, 0.9);
  const DualityReport r = verify_duality_identities(a2, pt, 2);
  CHECK(testutil::relative(r.jk_toda_gauge(0), std::exp(-1.0)) < 1e-15);
  CHECK(testutil::relative(r.jk_toda_gauge(1), std::exp(-0.4)) < 1e-15);
}

TEST_CASE("full determinant of the Moser element is one for B, C, D") {
  for (Family f : {Family::B, Family::C, Family::D}) {
    const RootDatum d = build_root_datum(make_algebra(f, 3));
    const MoserImage image = toda_to_moser_gauge(d, Sampler(point_seed(79, 0)).toda_point(d));
    CHECK(std::abs(minor_oracle_mk(image.g, d.dim()) - 1.0) < 1e-8);
  }
}

TEST_CASE("Goldfish to Toda from the Sp(4) Moser point") {
  const RootDatum c2 = build_root_datum(make_algebra(Family::C, 2));
  const GoldfishPoint gp{(RealVector(2) << 2.0, 0.7).finished(), (RealVector(2) << 0.3, -0.4).finished()};
  const TodaPoint pt = goldfish_to_toda(c2, gp);
  // H_1 is the power sum of the spectrum +-qhat
  const double expected = 2 * (std::pow(2.0, 2) + std::pow(0.7, 2)) / 4;
  CHECK(testutil::relative(toda_hamiltonians(c2, pt, 1)(0), expected) < 1e-12);
  const GoldfishPoint back = toda_to_goldfish(c2, pt);
  CHECK((back.qhat - gp.qhat).norm() < 1e-10);
  CHECK((back.phat - gp.phat).norm() < 1e-10);
}

TEST_CASE("symplectomorphism") {
  for (const auto& alg : {make_algebra(Family::A, 2), make_algebra(Family::A, 3),
                          make_algebra(Family::C, 2)}) {
    CAPTURE(testutil::label(alg));
    const RootDatum d = build_root_datum(alg);
    const SymplecticCheck c = symplectomorphism_check(d, Sampler(point_seed(83, 0)).toda_point(d), 1e-5);
    MESSAGE(testutil::label(alg), " sigma = ", c.sigma, ", residual = ", c.residual);
    CHECK(c.residual < 1e-4);
    CHECK(c.sigma == -1);
  }
}

TEST_CASE("non-generic points") {
  const RootDatum a2 = build_root_datum(make_algebra(Family::A, 2));
  CHECK_THROWS_AS(toda_to_goldfish(a2, two(-40, 40, 0.5, 0.5)), NonGenericPointError);
  CHECK_THROWS_AS(symplectomorphism_check(a2, two(-40, 40, 0.5, 0.5), 1e-5), NonGenericPointError);
}
