// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pairq/ansatz.hpp"
#include "pairq/compile.hpp"
#include "pairq/errors.hpp"
#include "pairq/io.hpp"
#include "pairq/report.hpp"
#include "pairq/spectrum.hpp"
#include "pairq/statevector.hpp"
#include "pairq/vqe.hpp"

namespace py = pybind11;
using namespace pairq;

namespace {

OptimizeConfig make_config(const std::string& start, double start_value, const std::string& grad, int n_starts,
                           std::uint64_t seed, int max_iter, double tol_grad, const std::optional<ParamMap>& initial) {
  OptimizeConfig cfg;
  if (initial) {
    cfg.start = OptimizeConfig::Start::Given;
    cfg.initial = *initial;
  } else if (start == "constant") {
    cfg.start = OptimizeConfig::Start::Constant;
  } else if (start == "random") {
    cfg.start = OptimizeConfig::Start::Random;
  } else if (start != "zero") {
    throw std::invalid_argument("start must be zero, constant or random");
  }
  cfg.start_value = start_value;
  cfg.grad_mode = parse_grad_mode(grad);
  cfg.n_starts = n_starts;
  cfg.seed = seed;
  cfg.max_iter = max_iter;
  cfg.tol_grad = tol_grad;
  cfg.validate();
  return cfg;
}

AnsatzSpec make_spec(const std::string& name, const std::string& arrangement, bool hcb) {
  AnsatzSpec spec = parse_ansatz(name);
  spec.arrangement = parse_arrangement(arrangement);
  if (hcb) spec.hcb = true;
  spec.validate();
  return spec;
}

py::array_t<cplx> to_numpy(const Statevector& s) {
  py::array_t<cplx> out(static_cast<py::ssize_t>(s.dim()));
  auto v = out.mutable_unchecked<1>();
  for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<py::ssize_t>(i)) = s[i];
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Separable-pair and pair-restricted coupled-cluster circuits";
  m.attr("__version__") = kVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<GrammarError>(m, "GrammarError", PyExc_ValueError);
  py::register_exception<OptimizerError>(m, "OptimizerError", PyExc_RuntimeError);

  py::class_<MolecularSystem>(m, "MolecularSystem")
      .def_readonly("n_electrons", &MolecularSystem::n_electrons)
      .def_readonly("n_orbitals", &MolecularSystem::n_orbitals)
      .def_readonly("e_nuclear", &MolecularSystem::e_nuclear)
      .def_readonly("pair_sets", &MolecularSystem::pair_sets)
      .def_property_readonly("n_qubits", &MolecularSystem::n_qubits)
      .def_property_readonly("constant_energy", &MolecularSystem::constant_energy);
  m.def("read_fcidump", py::overload_cast<const std::string&>(&read_fcidump), py::arg("path"));

  py::class_<LoadedSystem>(m, "LoadedSystem")
      .def_readonly("full", &LoadedSystem::full)
      .def_readonly("active", &LoadedSystem::active)
      .def_readonly("frozen", &LoadedSystem::frozen)
      .def_readonly("active_orbitals", &LoadedSystem::active_orbitals);
  m.def("load_system", &load_system, py::arg("path"), py::arg("frozen") = std::vector<int>{},
        py::arg("active") = std::vector<int>{});

  py::class_<PauliSum>(m, "PauliSum")
      .def_property_readonly("n_qubits", &PauliSum::n_qubits)
      .def("__len__", [](const PauliSum& h) { return h.terms().size(); })
      .def("__str__", &PauliSum::to_string);
  m.def("qubit_hamiltonian", [](const MolecularSystem& s) { return build_qubit_hamiltonian(s); }, py::arg("system"));
  m.def("hcb_hamiltonian", &build_hcb_hamiltonian, py::arg("system"));

  py::class_<AnsatzSpec>(m, "AnsatzSpec")
      .def_readonly("hcb", &AnsatzSpec::hcb)
      .def_readonly("spa", &AnsatzSpec::spa)
      .def_readonly("k", &AnsatzSpec::k)
      .def_property_readonly("name", &AnsatzSpec::name);
  m.def("parse_ansatz", &parse_ansatz, py::arg("name"));

  py::class_<Circuit>(m, "Circuit")
      .def_property_readonly("n_qubits", &Circuit::n_qubits)
      .def_property_readonly("parameters", &Circuit::parameters)
      .def_property_readonly("n_gates", [](const Circuit& c) { return c.gates().size(); })
      .def("__str__",
           [](const Circuit& c) {
             std::ostringstream s;
             write_circuit(s, c);
             return s.str();
           })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream s(text);
        return read_circuit(s);
      });
  m.def(
      "build_ansatz",
      [](const MolecularSystem& s, const std::string& name, const std::string& arrangement, bool hcb) {
        return build_ansatz(s, make_spec(name, arrangement, hcb));
      },
      py::arg("system"), py::arg("name"), py::arg("arrangement") = "ladder", py::arg("hcb") = false);
  m.def("compile", &compile, py::arg("circuit"), py::arg("level"));
  m.def(
      "resources",
      [](const Circuit& c) {
        const ResourceReport r = resources(c);
        py::dict d;
        d["n_params"] = r.n_params;
        d["n_cnot"] = r.n_cnot;
        d["depth"] = r.depth;
        d["n_qubits"] = r.n_qubits;
        return d;
      },
      py::arg("circuit"));

  m.def(
      "simulate", [](const Circuit& c, const ParamMap& p) { return to_numpy(simulate(c, p)); }, py::arg("circuit"),
      py::arg("params"));
  m.def(
      "energy", [](const Circuit& c, const ParamMap& p, const PauliSum& h) { return energy(c, p, Observable(h)); },
      py::arg("circuit"), py::arg("params"), py::arg("hamiltonian"));
  m.def(
      "gradient",
      [](const Circuit& c, const ParamMap& p, const PauliSum& h, const std::string& mode, double fd_step) {
        return gradient(c, p, h, parse_grad_mode(mode), fd_step);
      },
      py::arg("circuit"), py::arg("params"), py::arg("hamiltonian"), py::arg("mode") = "shift",
      py::arg("fd_step") = 1e-4);
  m.def(
      "variance",
      [](const Circuit& c, const ParamMap& p, const PauliSum& h) { return variance(simulate(c, p), h); },
      py::arg("circuit"), py::arg("params"), py::arg("hamiltonian"));
  m.def(
      "exact_energies",
      [](const PauliSum& h, std::optional<int> n_particles) {
        const auto spec = exact_spectrum(h, n_particles, false);
        return std::vector<double>(spec.eigenvalues.data(), spec.eigenvalues.data() + spec.eigenvalues.size());
      },
      py::arg("hamiltonian"), py::arg("n_particles") = std::nullopt);

  py::class_<VQEResult>(m, "VQEResult")
      .def_readonly("energy", &VQEResult::energy)
      .def_readonly("params", &VQEResult::params)
      .def_readonly("iterations", &VQEResult::iterations)
      .def_readonly("n_energy_evals", &VQEResult::n_energy_evals)
      .def_readonly("n_gradient_evals", &VQEResult::n_gradient_evals)
      .def_readonly("grad_norm_final", &VQEResult::grad_norm_final)
      .def_readonly("history", &VQEResult::history)
      .def_readonly("converged", &VQEResult::converged)
      .def_readonly("start_index", &VQEResult::start_index)
      .def_readonly("message", &VQEResult::message);
  m.def(
      "minimize",
      [](const Circuit& c, const PauliSum& h, const std::string& start, double start_value, const std::string& grad,
         int n_starts, std::uint64_t seed, int max_iter, double tol_grad, const std::optional<ParamMap>& initial) {
        const OptimizeConfig cfg = make_config(start, start_value, grad, n_starts, seed, max_iter, tol_grad, initial);
        py::gil_scoped_release release;
        return minimize(c, h, cfg);
      },
      py::arg("circuit"), py::arg("hamiltonian"), py::arg("start") = "zero", py::arg("start_value") = 0.1,
      py::arg("grad") = "adjoint", py::arg("n_starts") = 1, py::arg("seed") = 0, py::arg("max_iter") = 200,
      py::arg("tol_grad") = 1e-5, py::arg("initial") = std::nullopt);

  m.def(
      "optimize_report",
      [](const std::string& fcidump, const std::string& ansatz, bool oo, bool variance, bool fci, bool hcb,
         const std::string& arrangement, int level, std::vector<int> frozen, std::vector<int> active,
         const std::string& start, const std::string& grad, int n_starts, std::uint64_t seed, int max_iter) {
        OptimizeRequest q;
        q.fcidump = fcidump;
        q.frozen = std::move(frozen);
        q.active = std::move(active);
        q.ansatz = make_spec(ansatz, arrangement, hcb);
        q.config = make_config(start, 0.1, grad, n_starts, seed, max_iter, 1e-5, std::nullopt);
        q.level = level;
        q.orbital_optimization = oo;
        q.variance = variance;
        q.fci = fci;
        py::gil_scoped_release release;
        return to_json(run_optimize(q));
      },
      py::arg("fcidump"), py::arg("ansatz"), py::arg("oo") = false, py::arg("variance") = false,
      py::arg("fci") = false, py::arg("hcb") = false, py::arg("arrangement") = "ladder", py::arg("level") = -1,
      py::arg("frozen") = std::vector<int>{}, py::arg("active") = std::vector<int>{}, py::arg("start") = "zero",
      py::arg("grad") = "adjoint", py::arg("n_starts") = 1, py::arg("seed") = 0, py::arg("max_iter") = 200);
}
