#include "serialize.hpp"
#include "verify_suite.hpp"

#include "todadual/duality.hpp"
#include "todadual/errors.hpp"
#include "todadual/sampling.hpp"
#include "todadual/toda.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace todadual;
using namespace todadual::cli;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonGeneric = 3;
constexpr int kDeskRankCap = 8;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  int rank = 0;
  std::vector<double> q;
  std::vector<double> p;
  std::optional<std::uint64_t> seed;
  std::optional<int> kmax;
  std::optional<int> index;
  double dt = 1e-3;
  int steps = 1000;
  int points = 20;
  std::string scheme = "midpoint";
  std::string out;
  std::string format;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("TODADUAL_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("TODADUAL_SEED is not an unsigned integer");
  }
  return 0;
}

RootDatum datum_for(const Options& o) {
  try {
    const RootDatum datum = build_root_datum(make_algebra(parse_family(o.type), o.rank));
    if (o.rank > kDeskRankCap) {
      std::cerr << "warning: rank " << o.rank << " exceeds the desk-scale bound "
                << kDeskRankCap << "; minor enumeration may be slow\n";
    }
    return datum;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

RealVector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Explicit --q/--p, or a seeded random point.
TodaPoint point_for(const RootDatum& datum, const Options& o) {
  if (o.q.empty() != o.p.empty()) throw UsageError("--q and --p must be given together");
  if (o.q.empty()) return Sampler(point_seed(resolve_seed(o), 0)).toda_point(datum);
  if (static_cast<int>(o.q.size()) != datum.rank() ||
      static_cast<int>(o.p.size()) != datum.rank()) {
    throw UsageError("--q and --p need " + std::to_string(datum.rank()) + " entries each");
  }
  return TodaPoint{to_vector(o.q), to_vector(o.p)};
}

Format format_for(const Options& o, Format fallback) {
  if (o.format.empty()) return fallback;
  return parse_format(o.format);
}

int kmax_for(const RootDatum& datum, const Options& o) {
  const int k = o.kmax.value_or(datum.rank());
  if (k < 1 || k > datum.rank()) throw UsageError("--kmax must be in [1, rank]");
  return k;
}

int cmd_lax(const Options& o) {
  const RootDatum datum = datum_for(o);
  const TodaPoint pt = point_for(datum, o);
  const LaxPair lax = build_lax(datum, pt);
  const Format format = format_for(o, Format::Json);
  if (format == Format::Json) {
    json j{{"type", to_string(datum.family())}, {"rank", o.rank}, {"q", to_json(pt.q)}, {"p", to_json(pt.p)},
           {"g", to_json(lax.g)}, {"X", to_json(lax.X)}};
    write_output(o.out, j.dump(2) + "\n");
    return kExitOk;
  }
  std::vector<std::vector<double>> rows;
  for (int which = 0; which < 2; ++which) {
    const ComplexMatrix& m = which == 0 ? lax.g : lax.X;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        rows.push_back({double(which), double(r), double(c), m(r, c).real(), m(r, c).imag()});
  }
  write_output(o.out, format_table({"matrix", "row", "col", "re", "im"}, rows, format));
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const RootDatum datum = datum_for(o);
  if (format_for(o, Format::Json) != Format::Json) throw UsageError("verify writes JSON only");
  if (o.points < 1) throw UsageError("--points must be positive");
  const json report = run_verify_suite({datum.algebra, resolve_seed(o), o.points});
  write_output(o.out, report.dump(2) + "\n");
  return report["all_pass"].get<bool>() ? kExitOk : kExitVerifyFailed;
}

int cmd_dualmap(const Options& o) {
  const RootDatum datum = datum_for(o);
  if (format_for(o, Format::Json) != Format::Json) throw UsageError("dual-map writes JSON only");
  const TodaPoint pt = point_for(datum, o);
  const int kmax = kmax_for(datum, o);
  const MoserImage image = toda_to_moser_gauge(datum, pt);
  const DualityReport report = verify_duality_identities(datum, pt, kmax);
  const TodaPoint back = goldfish_to_toda(datum, image.goldfish);
  const double round_trip = std::max((back.q - pt.q).cwiseAbs().maxCoeff(),
                                     (back.p - pt.p).cwiseAbs().maxCoeff());
  json j{{"type", to_string(datum.family())},
         {"rank", o.rank},
         {"toda", {{"q", to_json(pt.q)}, {"p", to_json(pt.p)}}},
         {"goldfish", {{"qhat", to_json(image.goldfish.qhat)}, {"phat", to_json(image.goldfish.phat)}}},
         {"moser", {{"ahat", to_json(image.moser.ahat)}, {"g", to_json(image.g)},
                    {"momentum_residual", image.momentum_residual}}},
         {"report", {{"toda_values", to_json(report.toda_values)},
                     {"goldfish_values", to_json(report.goldfish_values)},
                     {"jk_toda_gauge", to_json(report.jk_toda_gauge)},
                     {"mk_moser_gauge", to_json(report.mk_moser_gauge)},
                     {"ik_moser_gauge", to_json(report.ik_moser_gauge)},
                     {"max_relative_mismatch", report.max_relative_mismatch}}},
         {"round_trip_error", round_trip}};
  write_output(o.out, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_integrate(const Options& o) {
  const RootDatum datum = datum_for(o);
  const TodaPoint pt = point_for(datum, o);
  const int n = datum.rank();
  const int index = o.index.value_or(quadratic_hamiltonian_index(datum.family()));
  if (index < 1 || index > n) throw UsageError("--hamiltonian must be in [1, rank]");
  if (o.steps < 0) throw UsageError("--steps must be nonnegative");
  const Format format = format_for(o, Format::Csv);

  const FlowScheme scheme = o.scheme == "composed" ? FlowScheme::MidpointTripleJump : FlowScheme::Midpoint;
  const auto trajectory = integrate_flow(datum, pt, index, o.dt, o.steps, scheme);
  std::vector<std::string> header{"t"};
  for (int i = 1; i <= n; ++i) header.push_back("q" + std::to_string(i));
  for (int i = 1; i <= n; ++i) header.push_back("p" + std::to_string(i));
  for (int i = 1; i <= n; ++i) header.push_back("H" + std::to_string(i));
  for (int i = 1; i <= datum.dim(); ++i) header.push_back("lambda" + std::to_string(i));

  std::vector<std::vector<double>> rows;
  for (std::size_t s = 0; s < trajectory.size(); ++s) {
    const TodaPoint& y = trajectory[s];
    std::vector<double> row{o.dt * static_cast<double>(s)};
    row.insert(row.end(), y.q.data(), y.q.data() + n);
    row.insert(row.end(), y.p.data(), y.p.data() + n);
    const RealVector h = toda_hamiltonians(datum, y, n);
    row.insert(row.end(), h.data(), h.data() + n);
    const RealVector spec = lax_spectrum(datum, y);
    row.insert(row.end(), spec.data(), spec.data() + spec.size());
    rows.push_back(std::move(row));
  }
  if (format == Format::Json) {
    json j{{"columns", header}, {"rows", rows}};
    write_output(o.out, j.dump() + "\n");
  } else {
    write_output(o.out, format_table(header, rows, format));
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--type", o.type, "Algebra family: A, B, C or D")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "D", "a", "b", "c", "d"}));
  cmd->add_option("--rank", o.rank, "Rank n")->required();
  cmd->add_option("--seed", o.seed, "Random seed (default: $TODADUAL_SEED, else 0)");
  cmd->add_option("--out", o.out, "Output path (default stdout)");
  cmd->add_option("--format", o.format, "json, csv or tsv")
      ->check(CLI::IsMember({"json", "csv", "tsv"}));
}

void add_point(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "Positions, comma separated")->delimiter(',');
  cmd->add_option("--p", o.p, "Momenta, comma separated")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open Toda chains of types A-D and their dual rational Goldfish models"};
  app.require_subcommand(1);
  Options o;

  auto* lax = app.add_subcommand("lax", "Lax pair (g, X) at a Toda point");
  add_common(lax, o);
  add_point(lax, o);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite on seeded samples");
  add_common(verify, o);
  verify->add_option("--points", o.points, "Samples per property")->capture_default_str();

  auto* dual = app.add_subcommand("dual-map", "Toda point to Goldfish point, with gauge invariants");
  add_common(dual, o);
  add_point(dual, o);
  dual->add_option("--kmax", o.kmax, "Number of Hamiltonians");

  auto* integ = app.add_subcommand("integrate", "Implicit-midpoint flow of a Toda Hamiltonian");
  add_common(integ, o);
  add_point(integ, o);
  integ->add_option("--dt", o.dt, "Time step")->capture_default_str();
  integ->add_option("--steps", o.steps, "Number of steps")->capture_default_str();
  integ->add_option("--hamiltonian", o.index,
                    "Hamiltonian index (default: the quadratic one)");
  integ->add_option("--scheme", o.scheme,
                    "midpoint, or composed: three midpoint substeps per step, order 4")
      ->check(CLI::IsMember({"midpoint", "composed"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*lax) return cmd_lax(o);
    if (*verify) return cmd_verify(o);
    if (*dual) return cmd_dualmap(o);
    if (*integ) return cmd_integrate(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonGenericPointError& e) {
    std::cerr << "non-generic point: " << e.what() << "\n";
    return kExitNonGeneric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
