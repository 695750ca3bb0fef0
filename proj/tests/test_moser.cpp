#include "oracles.hpp"
#include "test_util.hpp"

#include "todadual/combinatorics.hpp"
#include "todadual/errors.hpp"
#include "todadual/goldfish.hpp"
#include "todadual/linalg.hpp"
#include "todadual/moser.hpp"
#include "todadual/sampling.hpp"

#include <doctest.h>

using namespace todadual;

namespace {

RuijsenaarsMatrixSpec random_spec(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2, 2);
  RuijsenaarsMatrixSpec s{RealVector(m), RealVector(m)};
  while (true) {
    for (int i = 0; i < m; ++i) s.b(i) = u(rng), s.x(i) = u(rng);
    bool ok = true;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) ok = ok && std::abs(s.x(i) - s.x(j)) > 0.05;
    if (ok) return s;
  }
}

MoserPoint two_particle(double q1, double q2, double a1, double a2) {
  return {(RealVector(2) << q1, q2).finished(), (RealVector(2) << a1, a2).finished()};
}

}  // namespace

TEST_CASE("combinations") {
  std::vector<std::vector<int>> seen;
  for_each_combination(4, 2, [&](const std::vector<int>& c) { seen.push_back(c); });
  CHECK(seen.size() == 6);
  CHECK(seen.front() == std::vector<int>{0, 1});
  CHECK(seen.back() == std::vector<int>{2, 3});
  int empty = 0;
  for_each_combination(3, 0, [&](const std::vector<int>& c) { empty += c.empty(); });
  CHECK(empty == 1);
}

TEST_CASE("Ruijsenaars matrix") {
  RuijsenaarsMatrixSpec one{(RealVector(1) << 2.5).finished(), (RealVector(1) << 0.1).finished()};
  CHECK(build_ruijsenaars_matrix(one)(0, 0) == Complex(2.5));

  RuijsenaarsMatrixSpec s{(RealVector(3) << 1.2, -0.4, 0.9).finished(),
                          (RealVector(3) << 0.5, -1.0, 2.0).finished()};
  const ComplexMatrix m = build_ruijsenaars_matrix(s);
  CHECK(std::abs(m(1, 0) - 1.2 / 1.5) < 1e-15);
  CHECK(std::abs(m(2, 0) - 1.2 / (1.5 * -1.5)) < 1e-15);
  CHECK(m(0, 2) == Complex(0.0));
  CHECK(std::abs(m(2, 2) - 0.9) < 1e-15);

  RuijsenaarsMatrixSpec bad{(RealVector(2) << 1, 1).finished(), (RealVector(2) << 1, 1).finished()};
  CHECK_THROWS_AS(build_ruijsenaars_matrix(bad), std::invalid_argument);
}

TEST_CASE("closed-form bottom-row minors") {
  RuijsenaarsMatrixSpec s2{(RealVector(2) << 1.3, 0.7).finished(),
                           (RealVector(2) << 0.4, -0.9).finished()};
  CHECK(std::abs(closed_form_minor(s2, {0}) - 1.3 / 1.3) < 1e-15);
  CHECK(std::abs(closed_form_minor(s2, {0, 1}) - 1.3 * 0.7) < 1e-15);
  CHECK_THROWS_AS(closed_form_minor(s2, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_minor(s2, {}), std::invalid_argument);

  std::mt19937_64 rng(41);
  for (int m = 1; m <= 6; ++m) {
    for (int t = 0; t < 10; ++t) {
      const RuijsenaarsMatrixSpec s = random_spec(m, rng);
      const ComplexMatrix full = build_ruijsenaars_matrix(s);
      for (int k = 1; k <= m; ++k) {
        MinorSelector sel;
        for (int r = m - k; r < m; ++r) sel.rows.push_back(r);
        for_each_combination(m, k, [&](const std::vector<int>& cols) {
          sel.cols = cols;
          const double brute = oracle::cofactor_determinant(full(sel.rows, sel.cols)).real();
          CHECK(testutil::relative(closed_form_minor(s, cols), brute) < 1e-10);
        });
      }
    }
  }
}

TEST_CASE("Moser-gauge group elements") {
  SUBCASE("GL(2)") {
    const RootDatum a2 = build_root_datum(make_algebra(Family::A, 2));
    const oracle::TwoParticle s{1.1, -0.3, 0.2, 0.5};
    const ComplexMatrix g = build_moser_g(a2, two_particle(s.q1, s.q2, std::exp(s.p1), std::exp(s.p2)));
    CHECK((g - oracle::gl2_g(s)).norm() < 1e-15);
  }
  SUBCASE("Sp(4)") {
    const RootDatum c2 = build_root_datum(make_algebra(Family::C, 2));
    const oracle::TwoParticle s{2.0, 0.7, 0.3, -0.4};
    const ComplexMatrix g = build_moser_g(c2, two_particle(s.q1, s.q2, std::exp(s.p1), std::exp(s.p2)));
    CHECK((g - oracle::sp4_g(s)).norm() < 1e-14);
    CHECK(std::abs(g(3, 0) + std::exp(s.p1) / (2 * s.q1 * (s.q1 * s.q1 - s.q2 * s.q2))) < 1e-15);
  }
  SUBCASE("D2 corner entry vanishes") {
    const RootDatum d2 = build_root_datum(make_algebra(Family::D, 2));
    const ComplexMatrix g = build_moser_g(d2, two_particle(1.5, 0.4, 0.8, 1.3));
    CHECK(g(2, 1) == Complex(0.0));
    CHECK(moser_momentum_residual(d2, two_particle(1.5, 0.4, 0.8, 1.3)) < 1e-12);
  }
  SUBCASE("closed forms agree with the recurrence for all types") {
    for (const auto& alg : testutil::algebras(6)) {
      CAPTURE(testutil::label(alg));
      const RootDatum d = build_root_datum(alg);
      for (std::uint64_t t = 0; t < 10; ++t) {
        Sampler sampler(point_seed(43, t));
        const GoldfishPoint gp = sampler.chamber_point(d);
        MoserPoint mp{gp.qhat, gp.phat.array().exp()};
        const ComplexMatrix g = build_moser_g(d, mp);
        const ComplexMatrix ref = oracle::moser_recurrence(d, mp.qhat, mp.ahat);
        CHECK((g - ref).norm() < 1e-12 * ref.norm());
        CHECK(ComplexMatrix(g.triangularView<Eigen::StrictlyUpper>()).norm() == 0.0);
        CHECK(group_residual(d, g) < 1e-9);
        CHECK(moser_momentum_residual(d, g, mp.qhat) < 1e-9);
      }
    }
  }
  SUBCASE("D chamber with qhat_n <= 0") {
    const RootDatum d3 = build_root_datum(make_algebra(Family::D, 3));
    const RealVector a = (RealVector(3) << 0.7, 1.4, 0.9).finished();
    MoserPoint negative{(RealVector(3) << 2.0, 1.1, -0.6).finished(), a};
    const ComplexMatrix g = build_moser_g(d3, negative);
    CHECK((g - oracle::moser_recurrence(d3, negative.qhat, a)).norm() < 1e-12 * g.norm());
    // at qhat_n = 0 the recurrence is 0/0 in one entry; the closed form is regular
    MoserPoint zero{(RealVector(3) << 2.0, 1.1, 0.0).finished(), a};
    const ComplexMatrix gz = build_moser_g(d3, zero);
    CHECK(gz.allFinite());
    CHECK(group_residual(d3, gz) < 1e-12);
    CHECK(moser_momentum_residual(d3, gz, zero.qhat) < 1e-12);
  }
  SUBCASE("rejections") {
    const RootDatum c2 = build_root_datum(make_algebra(Family::C, 2));
    CHECK_THROWS_AS(build_moser_g(c2, two_particle(0.5, 1.0, 1, 1)), ChamberError);
    CHECK_THROWS_AS(build_moser_g(c2, two_particle(1.0, -0.2, 1, 1)), ChamberError);
    CHECK_THROWS_AS(build_moser_g(c2, two_particle(1.0, 1.0 - 1e-10, 1, 1)), ChamberError);
    CHECK_THROWS_AS(build_moser_g(c2, two_particle(1.0, 0.5, -1, 1)), std::invalid_argument);
  }
}

TEST_CASE("minor oracle") {
  const RootDatum a2 = build_root_datum(make_algebra(Family::A, 2));
  const oracle::TwoParticle s{0.9, -0.6, -0.3, 0.4};
  const MoserPoint mp = two_particle(s.q1, s.q2, std::exp(s.p1), std::exp(s.p2));
  CHECK(testutil::relative(minor_oracle_mk(a2, mp, 1), oracle::gl2_m1(s)) < 1e-14);
  CHECK(testutil::relative(minor_oracle_mk(a2, mp, 2), oracle::gl2_m2(s)) < 1e-14);

  for (const auto& alg : testutil::algebras(4)) {
    if (alg.family == Family::A) continue;
    const RootDatum d = build_root_datum(alg);
    const GoldfishPoint gp = Sampler(point_seed(47, alg.rank)).chamber_point(d);
    const MoserPoint m{gp.qhat, gp.phat.array().exp()};
    CHECK(std::abs(minor_oracle_mk(d, m, d.dim()) - 1.0) < 1e-10);
    for (int k = 1; k <= d.dim(); ++k) CHECK(minor_oracle_mk(d, m, k) > 0);
  }
  CHECK_THROWS_AS(minor_oracle_mk(a2, mp, 3), std::invalid_argument);
}

TEST_CASE("momentum residual detects perturbations") {
  const RootDatum c2 = build_root_datum(make_algebra(Family::C, 2));
  const MoserPoint mp = two_particle(2.0, 0.7, std::exp(0.3), std::exp(-0.4));
  CHECK(moser_momentum_residual(c2, mp) < 1e-10);
  ComplexMatrix g = build_moser_g(c2, mp);
  g(2, 0) += 0.1;
  CHECK(moser_momentum_residual(c2, g, mp.qhat) > 1e-3);
}

TEST_CASE("bottom rows of C-type g form a Ruijsenaars matrix") {
  for (int n = 1; n <= 4; ++n) {
    const RootDatum d = build_root_datum(make_algebra(Family::C, n));
    const GoldfishPoint gp = Sampler(point_seed(53, n)).chamber_point(d);
    const MoserPoint mp{gp.qhat, gp.phat.array().exp()};
    const ComplexMatrix g = build_moser_g(d, mp);
    RuijsenaarsMatrixSpec s{RealVector(2 * n), RealVector(2 * n)};
    for (int i = 0; i < n; ++i) {
      s.b(i) = ((n - i) % 2 == 0 ? 1.0 : -1.0) * mp.ahat(i);
      s.b(2 * n - 1 - i) = 1.0 / mp.ahat(i);
      s.x(i) = -mp.qhat(i);
      s.x(2 * n - 1 - i) = mp.qhat(i);
    }
    const ComplexMatrix m = build_ruijsenaars_matrix(s);
    CHECK((g.bottomRows(n) - m.bottomRows(n)).norm() < 1e-12 * m.bottomRows(n).norm());
  }
}
