#include "verify_suite.hpp"

#include "todadual/duality.hpp"
#include "todadual/errors.hpp"
#include "todadual/goldfish.hpp"
#include "todadual/moser.hpp"
#include "todadual/poisson.hpp"
#include "todadual/sampling.hpp"
#include "todadual/toda.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

namespace todadual::cli {

namespace {

struct Property {
  Property(std::string n, double tol) : name(std::move(n)), tolerance(tol) {}

  std::string name;
  double tolerance;
  double worst = 0.0;
  int checked = 0;
  int skipped = 0;
  std::string error;

  void record(double value) {
    worst = std::max(worst, value);
    ++checked;
  }
  bool pass() const { return error.empty() && checked > 0 && worst < tolerance; }
  json to_json() const {
    json j{{"name", name}, {"pass", pass()}, {"worst", worst}, {"tolerance", tolerance},
           {"checked", checked}, {"skipped_nongeneric", skipped}};
    if (!error.empty()) j["error"] = error;
    return j;
  }
};

double relative(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// Runs body for each point index; library errors are recorded on the property.
void for_points(Property& prop, int points, const std::function<void(int)>& body) {
  for (int i = 0; i < points; ++i) {
    try {
      body(i);
    } catch (const NonGenericPointError&) {
      ++prop.skipped;
    } catch (const std::exception& e) {
      if (prop.error.empty()) prop.error = e.what();
      prop.worst = std::max(prop.worst, std::numeric_limits<double>::infinity());
    }
  }
}

}  // namespace

json run_verify_suite(const SuiteConfig& config) {
  const RootDatum datum = build_root_datum(config.algebra);
  const int n = datum.rank();
  const Family family = datum.family();
  auto toda_at = [&](int i) { return Sampler(point_seed(config.seed, i)).toda_point(datum); };
  auto chamber_at = [&](int i) {
    return Sampler(point_seed(config.seed, 0x10000u + i)).chamber_point(datum);
  };

  std::vector<Property> props;
  json discrepancies = json::array();
  json conventions = json::array();

  Property toda_momentum{"toda_momentum_residual", 1e-9};
  for_points(toda_momentum, config.points, [&](int i) {
    const LaxPair lax = build_lax(datum, toda_at(i));
    const ComplexMatrix conj = lax.g * lax.X * lax.g.inverse();
    toda_momentum.record(
        (project_lower_nilpotent(datum, conj) - datum.momentum_value).norm() +
        project_compact(datum, lax.X).norm());
  });
  props.push_back(toda_momentum);

  Property moser_momentum{"moser_momentum_residual", 1e-9};
  Property moser_group{"moser_group_residual", 1e-9};
  Property oracle{"goldfish_closed_form_vs_minor_oracle", 1e-8};
  for_points(oracle, config.points, [&](int i) {
    const GoldfishPoint gp = chamber_at(i);
    const MoserPoint mp = a_from_p(datum, gp);
    const ComplexMatrix g = build_moser_g(datum, mp);
    moser_momentum.record(moser_momentum_residual(datum, g, mp.qhat));
    moser_group.record(group_residual(datum, g));
    for (int k = 1; k <= n; ++k) {
      const double closed = goldfish_hamiltonian(datum, gp, k);
      const double minor = minor_oracle_mk(g, k);
      oracle.record(relative(closed, minor));
      if (family == Family::D && k == 1) {
        const double printed = printed_d_h1(gp);
        discrepancies.push_back({{"hamiltonian", "D H1"},
                                 {"qhat", to_json(gp.qhat)},
                                 {"phat", to_json(gp.phat)},
                                 {"printed_inner_sum_form", printed},
                                 {"minor_oracle", minor},
                                 {"relative_difference", relative(printed, minor)}});
      }
      if (family == Family::C && n == 2 && k == 2) {
        conventions.push_back({{"qhat", to_json(gp.qhat)},
                               {"phat", to_json(gp.phat)},
                               {"library_h2_m2", closed},
                               {"half_m2_convention", 0.5 * minor}});
      }
    }
  });
  props.push_back(moser_momentum);
  props.push_back(moser_group);
  props.push_back(oracle);

  Property duality{"duality_invariance", 1e-7};
  Property round_trip{"round_trip", 1e-7};
  for_points(duality, config.points, [&](int i) {
    const TodaPoint pt = toda_at(i);
    duality.record(verify_duality_identities(datum, pt, n).max_relative_mismatch);
    const TodaPoint back = goldfish_to_toda(datum, toda_to_goldfish(datum, pt));
    round_trip.record(std::max((back.q - pt.q).cwiseAbs().maxCoeff(),
                               (back.p - pt.p).cwiseAbs().maxCoeff()));
  });
  round_trip.skipped = duality.skipped;
  props.push_back(duality);
  props.push_back(round_trip);

  Property toda_comm{"toda_commutativity", 1e-5};
  Property gold_comm{"goldfish_commutativity", 1e-5};
  for_points(toda_comm, config.points, [&](int i) {
    toda_comm.record(
        commutativity_matrix(datum, ObservableFamily::Toda, toda_at(i), 1e-3).maxCoeff());
  });
  for_points(gold_comm, config.points, [&](int i) {
    gold_comm.record(
        commutativity_matrix(datum, ObservableFamily::Goldfish, chamber_at(i), 1e-3).maxCoeff());
  });
  props.push_back(toda_comm);
  props.push_back(gold_comm);

  if (family != Family::A) {
    Property odd{"odd_traces_vanish", 1e-10};
    for_points(odd, config.points, [&](int i) {
      const LaxPair lax = build_lax(datum, toda_at(i));
      ComplexMatrix power = lax.X;
      const ComplexMatrix square = lax.X * lax.X;
      for (int k = 0; k < n; ++k) {
        odd.record(std::abs(power.trace()));
        power = power * square;
      }
    });
    props.push_back(odd);
  }

  json report;
  report["type"] = to_string(family);
  report["rank"] = n;
  report["seed"] = config.seed;
  report["points"] = config.points;
  report["rng"] =
      "mt19937_64 seeded per point with splitmix64(seed, index); Toda points use indices "
      "0..points-1, chamber points 65536+index";
  bool all = true;
  report["properties"] = json::array();
  for (const auto& p : props) {
    all = all && p.pass();
    report["properties"].push_back(p.to_json());
  }
  report["discrepancies"] = discrepancies;
  if (!conventions.empty()) report["c2_h2_conventions"] = conventions;
  report["all_pass"] = all;
  return report;
}

}  // namespace todadual::cli
