#include "todadual/duality.hpp"
#include "todadual/errors.hpp"
#include "todadual/goldfish.hpp"
#include "todadual/moser.hpp"
#include "todadual/toda.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace todadual;

namespace {

RootDatum datum(const std::string& type, int rank) {
  return build_root_datum(make_algebra(parse_family(type), rank));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Open Toda chains of types A-D and their dual rational Goldfish models";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<StructuralError>(m, "StructuralError", error);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", error);
  auto non_generic = py::register_exception<NonGenericPointError>(m, "NonGenericPointError", error);
  py::register_exception<DegenerateSpectrumError>(m, "DegenerateSpectrumError", non_generic);
  py::register_exception<GaussDecompositionError>(m, "GaussDecompositionError", non_generic);
  py::register_exception<ChamberError>(m, "ChamberError", non_generic);
  py::register_exception<StepFailureError>(m, "StepFailureError", error);

  m.def(
      "build_lax",
      [](const std::string& type, int rank, const RealVector& q, const RealVector& p) {
        const LaxPair lax = build_lax(datum(type, rank), {q, p});
        return std::make_pair(lax.g, lax.X);
      },
      py::arg("type"), py::arg("rank"), py::arg("q"), py::arg("p"), "Lax pair (g, X).");

  m.def(
      "toda_hamiltonians",
      [](const std::string& type, int rank, const RealVector& q, const RealVector& p, int kmax) {
        return toda_hamiltonians(datum(type, rank), {q, p}, kmax);
      },
      py::arg("type"), py::arg("rank"), py::arg("q"), py::arg("p"), py::arg("kmax"));

  m.def(
      "lax_spectrum",
      [](const std::string& type, int rank, const RealVector& q, const RealVector& p) {
        return lax_spectrum(datum(type, rank), {q, p});
      },
      py::arg("type"), py::arg("rank"), py::arg("q"), py::arg("p"), "Eigenvalues of X, descending.");

  m.def(
      "toda_to_goldfish",
      [](const std::string& type, int rank, const RealVector& q, const RealVector& p) {
        const GoldfishPoint gp = toda_to_goldfish(datum(type, rank), {q, p});
        return std::make_pair(gp.qhat, gp.phat);
      },
      py::arg("type"), py::arg("rank"), py::arg("q"), py::arg("p"), "Returns (qhat, phat).");

  m.def(
      "goldfish_to_toda",
      [](const std::string& type, int rank, const RealVector& qhat, const RealVector& phat) {
        const TodaPoint pt = goldfish_to_toda(datum(type, rank), {qhat, phat});
        return std::make_pair(pt.q, pt.p);
      },
      py::arg("type"), py::arg("rank"), py::arg("qhat"), py::arg("phat"), "Returns (q, p).");

  m.def(
      "goldfish_hamiltonians",
      [](const std::string& type, int rank, const RealVector& qhat, const RealVector& phat, int kmax) {
        return goldfish_hamiltonians(datum(type, rank), {qhat, phat}, kmax);
      },
      py::arg("type"), py::arg("rank"), py::arg("qhat"), py::arg("phat"), py::arg("kmax"));

  m.def(
      "minor_oracle_mk",
      [](const std::string& type, int rank, const RealVector& qhat, const RealVector& phat, int k) {
        const RootDatum d = datum(type, rank);
        return minor_oracle_mk(d, a_from_p(d, {qhat, phat}), k);
      },
      py::arg("type"), py::arg("rank"), py::arg("qhat"), py::arg("phat"), py::arg("k"),
      "m_k(g g^dagger) of the Moser-gauge element at (qhat, phat).");

  m.def(
      "closed_form_minor",
      [](const RealVector& b, const RealVector& x, const std::vector<int>& cols) {
        return closed_form_minor({b, x}, cols);
      },
      py::arg("b"), py::arg("x"), py::arg("cols"));

  m.def(
      "rs_hamiltonian_a",
      [](const RealVector& qhat, const RealVector& phat, double nu, int k) {
        return rs_hamiltonian_A({qhat, phat}, {nu}, k);
      },
      py::arg("qhat"), py::arg("phat"), py::arg("nu"), py::arg("k"));

  m.def(
      "verify_duality_identities",
      [](const std::string& type, int rank, const RealVector& q, const RealVector& p, int kmax) {
        const DualityReport r = verify_duality_identities(datum(type, rank), {q, p}, kmax);
        py::dict out;
        out["toda_values"] = r.toda_values;
        out["goldfish_values"] = r.goldfish_values;
        out["jk_toda_gauge"] = r.jk_toda_gauge;
        out["mk_moser_gauge"] = r.mk_moser_gauge;
        out["ik_moser_gauge"] = r.ik_moser_gauge;
        out["max_relative_mismatch"] = r.max_relative_mismatch;
        return out;
      },
      py::arg("type"), py::arg("rank"), py::arg("q"), py::arg("p"), py::arg("kmax"));

  m.def(
      "integrate_flow",
      [](const std::string& type, int rank, const RealVector& q, const RealVector& p, int index,
         double dt, int steps, bool composed) {
        const auto traj = integrate_flow(datum(type, rank), {q, p}, index, dt, steps,
                                         composed ? FlowScheme::MidpointTripleJump : FlowScheme::Midpoint);
        Eigen::MatrixXd qs(traj.size(), rank), ps(traj.size(), rank);
        for (std::size_t s = 0; s < traj.size(); ++s) {
          qs.row(static_cast<Eigen::Index>(s)) = traj[s].q.transpose();
          ps.row(static_cast<Eigen::Index>(s)) = traj[s].p.transpose();
        }
        return std::make_pair(qs, ps);
      },
      py::arg("type"), py::arg("rank"), py::arg("q"), py::arg("p"), py::arg("index"), py::arg("dt"),
      py::arg("steps"), py::arg("composed") = false, "Returns (q, p) arrays of shape (steps + 1, rank).");
}
