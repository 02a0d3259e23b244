// Copyright 2026 The clusterqis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings: a thin layer over the protocol entry points. Inputs are
// plain complex sequences; results come back as read-only objects.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.h"
#include "clusterqis/channel.h"
#include "clusterqis/errors.h"
#include "clusterqis/measurement.h"
#include "clusterqis/party.h"
#include "clusterqis/qis.h"
#include "clusterqis/security.h"
#include "clusterqis/teleport.h"

namespace py = pybind11;
using namespace clusterqis;

namespace {

std::vector<Complex> amplitudes_of(const StateVector& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

SingleInput single_input(Complex a0, Complex b0) {
  SingleInput in{a0, b0};
  in.validate();
  return in;
}

TwoInput two_input(const std::vector<Complex>& amps) {
  if (amps.size() != 4) throw ConfigError("two-qubit input needs 4 amplitudes, got " + std::to_string(amps.size()));
  TwoInput in;
  for (std::size_t i = 0; i < 4; ++i) in.amps[i] = amps[i];
  in.validate();
  return in;
}

std::vector<std::string> povm_names(const std::vector<PovmOutcome>& outs) {
  std::vector<std::string> names;
  for (PovmOutcome k : outs) names.emplace_back(povm_name(k));
  return names;
}

}  // namespace

PYBIND11_MODULE(_clusterqis, m) {
  m.doc() = "Cluster-state teleportation and quantum information splitting";

  auto config_error = py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<PovmInvalidError>(m, "PovmInvalidError", config_error.ptr());
  py::register_exception<ProtocolError>(m, "ProtocolError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<AccessError>(m, "AccessError", PyExc_PermissionError);

  py::enum_<BellOutcome>(m, "BellOutcome")
      .value("PHI_PLUS", BellOutcome::kPhiPlus)
      .value("PHI_MINUS", BellOutcome::kPhiMinus)
      .value("PSI_PLUS", BellOutcome::kPsiPlus)
      .value("PSI_MINUS", BellOutcome::kPsiMinus);

  py::class_<ClusterParams>(m, "ClusterParams")
      .def(py::init([](double alpha, double beta, double gamma, double eta) {
             ClusterParams p{alpha, beta, gamma, eta};
             p.validate();
             return p;
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("eta"))
      .def_static("maximal", &ClusterParams::maximal)
      .def_readonly("alpha", &ClusterParams::alpha)
      .def_readonly("beta", &ClusterParams::beta)
      .def_readonly("gamma", &ClusterParams::gamma)
      .def_readonly("eta", &ClusterParams::eta)
      .def("__repr__", [](const ClusterParams& p) {
        std::ostringstream s;
        s << "ClusterParams(" << p.alpha << ", " << p.beta << ", " << p.gamma << ", " << p.eta << ")";
        return s.str();
      });

  m.def(
      "analytic_post_bsm",
      [](Complex a0, Complex b0, const ClusterParams& p, BellOutcome alice, BellOutcome bob) {
        return amplitudes_of(analytic_post_bsm(single_input(a0, b0), p, alice, bob));
      },
      py::arg("a0"), py::arg("b0"), py::arg("cluster"), py::arg("alice"), py::arg("bob"),
      "Unnormalized qubit-4 amplitudes after both Bell measurements.");

  m.def("psuc_formula", &psuc_formula, py::arg("n"), py::arg("beta"), py::arg("gamma"), py::arg("rho"));
  m.def("psuc_closed_form", &psuc_closed_form, py::arg("n"), py::arg("beta"), py::arg("gamma"), py::arg("rho"));
  m.def("povm_min_rho", &povm_min_rho, py::arg("beta"), py::arg("gamma"));
  m.def("povm_k3_min_eigenvalue", &povm_k3_min_eigenvalue, py::arg("beta"), py::arg("gamma"), py::arg("rho"));

  py::class_<TeleportResult>(m, "TeleportResult")
      .def_readonly("success", &TeleportResult::success)
      .def_readonly("trials_used", &TeleportResult::trials_used)
      .def_readonly("channels_allocated", &TeleportResult::channels_allocated)
      .def_readonly("fidelity", &TeleportResult::fidelity)
      .def_property_readonly("povm_outcomes", [](const TeleportResult& r) { return povm_names(r.povm_outcomes); })
      .def_property_readonly("output",
                             [](const TeleportResult& r) -> std::optional<std::vector<Complex>> {
                               if (!r.output) return std::nullopt;
                               return amplitudes_of(*r.output);
                             })
      .def_property_readonly("transcript", [](const TeleportResult& r) { return serialize_transcript(r.transcript); });

  m.def(
      "teleport",
      [](Complex a0, Complex b0, const ClusterParams& cluster, double rho, int max_trials, std::uint64_t seed) {
        TrialPlan plan;
        plan.cluster = cluster;
        plan.rho = rho;
        plan.max_trials = max_trials;
        InMemoryTransport transport;
        return run_teleport_with_retries(single_input(a0, b0), plan, seed, transport);
      },
      py::arg("a0"), py::arg("b0"), py::arg("cluster") = ClusterParams::maximal(), py::arg("rho") = 1.5,
      py::arg("max_trials") = 1, py::arg("seed") = 0);

  py::class_<QisResult>(m, "QisResult")
      .def_property_readonly("key", [](const QisResult& r) { return r.key.to_string(); })
      .def_property_readonly("correction",
                             [](const QisResult& r) -> std::optional<std::string> {
                               if (!r.correction) return std::nullopt;
                               return r.correction->to_string();
                             })
      .def_readonly("fidelity", &QisResult::fidelity)
      .def_property_readonly("transcript", [](const QisResult& r) { return serialize_transcript(r.transcript); });

  m.def(
      "qis",
      [](const std::vector<Complex>& amps, std::uint64_t seed, const std::string& corrections) {
        InMemoryTransport transport;
        return run_qis(two_input(amps), seed, transport, correction_source_from_name(corrections));
      },
      py::arg("amps"), py::arg("seed") = 0, py::arg("corrections") = "synthesized");

  py::class_<Table1Report>(m, "Table1Report")
      .def_property_readonly("rows", [](const Table1Report& r) { return r.rows.size(); })
      .def_readonly("mismatches", &Table1Report::mismatches)
      .def_readonly("review_notes", &Table1Report::review_notes)
      .def("all_pass", &Table1Report::all_pass)
      .def("to_text", &Table1Report::to_text);
  m.def("verify_table1", &verify_table1);

  py::class_<LeakageReport>(m, "LeakageReport")
      .def_readonly("max_trace_distance", &LeakageReport::max_trace_distance)
      .def_readonly("max_mutual_information", &LeakageReport::max_mutual_information)
      .def_readonly("outcome_tv_distance", &LeakageReport::outcome_tv_distance)
      .def_property_readonly("branches", [](const LeakageReport& r) { return r.branches.size(); })
      .def("eve_unaltered", [](const LeakageReport& r) { return r.eve_unaltered(); })
      .def("to_text", &LeakageReport::to_text);

  m.def(
      "teleport_with_eve",
      [](Complex a0, Complex b0, const ClusterParams& cluster, std::uint64_t seed, const std::string& bob_label,
         const std::string& attachment) {
        AttackConfig attack;
        attack.bob_label = bob_label;
        attack.attachment = attachment_from_name(attachment);
        return run_teleport_with_eve(single_input(a0, b0), cluster, seed, attack);
      },
      py::arg("a0"), py::arg("b0"), py::arg("cluster") = ClusterParams::maximal(), py::arg("seed") = 0,
      py::arg("bob_label") = "2", py::arg("attachment") = "tensor");

  m.def(
      "qis_with_eve",
      [](const std::vector<Complex>& amps, std::uint64_t seed, const std::string& bob_label,
         const std::string& attachment) {
        AttackConfig attack;
        attack.protocol = Protocol::kQis;
        attack.bob_label = bob_label;
        attack.attachment = attachment_from_name(attachment);
        return run_qis_with_eve(two_input(amps), seed, attack);
      },
      py::arg("amps"), py::arg("seed") = 0, py::arg("bob_label") = "2", py::arg("attachment") = "tensor");

  m.def(
      "access_structure",
      [](const std::vector<Complex>& first, const std::vector<Complex>& second) {
        const AccessReport r = access_structure_check(two_input(first), two_input(second));
        py::dict d;
        d["chika_distance"] = r.chika_distance;
        d["bob_distance"] = r.bob_distance;
        d["bob_to_mixed"] = r.bob_to_mixed;
        d["chika_given_alice_distance"] = r.chika_given_alice_distance;
        d["chika_all_bits_distance"] = r.chika_all_bits_distance;
        d["holds"] = r.holds();
        return d;
      },
      py::arg("first"), py::arg("second"));

  m.def(
      "sweep_fig1_csv",
      [](double gamma, double rho, const std::vector<double>& betas, const std::vector<int>& trials, int samples,
         std::uint64_t seed, int parallel) {
        cli::SweepConfig cfg;
        cfg.gamma = gamma;
        cfg.rho = rho;
        cfg.betas = betas;
        cfg.trials = trials;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.parallel = parallel;
        cfg.input = SingleInput{0.6, 0.8};
        py::gil_scoped_release release;
        return cli::sweep_fig1_csv(cfg);
      },
      py::arg("gamma") = 0.5, py::arg("rho") = 1.5, py::arg("betas"), py::arg("trials") = std::vector<int>{2, 5, 10},
      py::arg("samples") = 0, py::arg("seed") = 0, py::arg("parallel") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
