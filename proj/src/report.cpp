// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

#include "json.hpp"
#include "pairq/compile.hpp"
#include "pairq/spectrum.hpp"
#include "pairq/statevector.hpp"

namespace pairq {

namespace {

using nlohmann::ordered_json;

// JSON has no NaN; a diverged energy becomes null.
ordered_json number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json to_object(const VQEResult& r) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = number(v);
  ordered_json history = ordered_json::array();
  for (double e : r.history) history.push_back(number(e));
  return {{"energy", number(r.energy)},
          {"params", params},
          {"iterations", r.iterations},
          {"n_energy_evals", r.n_energy_evals},
          {"n_gradient_evals", r.n_gradient_evals},
          {"grad_norm_final", number(r.grad_norm_final)},
          {"converged", r.converged},
          {"start_index", r.start_index},
          {"message", r.message},
          {"history", history}};
}

Statevector jw_state(const Circuit& c, const ParamMap& p, const AnsatzSpec& spec) {
  Statevector psi = simulate(c, p);
  return spec.hcb ? hcb_to_jw_state(psi, spec.layout) : psi;
}

}  // namespace

int default_level(const AnsatzSpec& spec) { return spec.spa ? 2 : 1; }

std::optional<std::pair<double, std::string>> fci_energy(const LoadedSystem& ls, int max_qubits) {
  if (ls.active.n_qubits() <= max_qubits)
    return std::make_pair(
        exact_spectrum(build_qubit_hamiltonian(ls.active), ls.active.n_electrons, false).ground_energy(),
        std::string("exact"));
  const auto& ref = ls.reference;
  if (ref && ref->e_fci && ref->frozen == ls.frozen && ref->active == ls.active_orbitals)
    return std::make_pair(*ref->e_fci, std::string("reference"));
  return std::nullopt;
}

RunReport run_optimize(const OptimizeRequest& q) {
  RunReport rep;
  rep.started = utc_timestamp();
  rep.input = q.fcidump;
  const AnsatzSpec& spec = q.ansatz;
  spec.validate();
  q.config.validate();
  const LoadedSystem ls = load_system(q.fcidump, q.frozen, q.active);
  rep.ansatz = spec.name();
  rep.hcb = spec.hcb;
  rep.grad_mode = to_string(q.config.grad_mode);
  rep.n_starts = q.config.n_starts;
  rep.seed = q.config.seed;
  rep.level = q.level < 0 ? default_level(spec) : q.level;

  MolecularSystem active = ls.active;
  if (q.orbital_optimization) {
    OrbitalOptimizeConfig oc;
    oc.vqe = q.config;
    const auto oo = optimize_orbitals(ls.full, ls.active_orbitals, ls.frozen, spec, oc);
    rep.result = oo.result;
    rep.orbital_optimized = true;
    rep.macro_energies = oo.macro_energies;
    active = oo.active_system;
  }
  const Circuit circuit = build_ansatz(active, spec);
  rep.resources = resources(compile(circuit, rep.level));
  if (!q.orbital_optimization) {
    const PauliSum h = spec.hcb ? build_hcb_hamiltonian(active) : build_qubit_hamiltonian(active, spec.layout);
    rep.result = minimize(circuit, h, q.config);
  }
  if (q.fci)
    if (const auto f = fci_energy(ls)) {
      rep.fci = f->first;
      rep.fci_source = f->second;
    }
  if (q.variance || !q.dump_state.empty()) {
    const Statevector psi = jw_state(circuit, rep.result.params, spec);
    if (q.variance) {
      ParamMap zero;
      for (const auto& n : circuit.parameters()) zero[n] = 0.0;
      const PauliSum h = build_qubit_hamiltonian(active, spec.layout);
      rep.variance = std::make_pair(variance(jw_state(circuit, zero, spec), h), variance(psi, h));
    }
    if (!q.dump_state.empty()) psi.write_binary(q.dump_state);
  }
  rep.finished = utc_timestamp();
  return rep;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string to_json(const RunReport& r, int indent) {
  ordered_json j;
  j["version"] = kVersion;
  j["input"] = r.input;
  j["ansatz"] = r.ansatz;
  j["hcb"] = r.hcb;
  j["resources"] = {{"level", r.level < 0 ? ordered_json(nullptr) : ordered_json(r.level)},
                    {"n_params", r.resources.n_params},
                    {"n_cnot", r.resources.n_cnot},
                    {"depth", r.resources.depth},
                    {"n_qubits", r.resources.n_qubits}};
  j["optimizer"] = {{"method", "bfgs"}, {"grad_mode", r.grad_mode}, {"n_starts", r.n_starts}, {"seed", r.seed}};
  j["result"] = to_object(r.result);
  if (r.orbital_optimized) {
    ordered_json macro = ordered_json::array();
    for (double e : r.macro_energies) macro.push_back(number(e));
    j["orbital_optimization"] = {{"macro_iterations", static_cast<int>(r.macro_energies.size())},
                                 {"macro_energies", macro}};
  }
  if (r.fci) j["fci"] = {{"energy", number(*r.fci)}, {"source", r.fci_source}, {"error", number(r.result.energy - *r.fci)}};
  // clamp rounding below zero; the variance is nonnegative
  if (r.variance)
    j["variance"] = {{"hf", number(std::max(0.0, r.variance->first))},
                     {"optimized", number(std::max(0.0, r.variance->second))}};
  j["timestamps"] = {{"started", r.started}, {"finished", r.finished}};
  return j.dump(indent);
}

std::string error_json(const std::string& kind, const std::string& message, int exit_code, const std::string& input,
                       const std::string& ansatz) {
  ordered_json j;
  j["version"] = kVersion;
  j["error"] = {{"kind", kind}, {"message", message}, {"exit_code", exit_code}};
  if (!input.empty()) j["input"] = input;
  if (!ansatz.empty()) j["ansatz"] = ansatz;
  j["timestamp"] = utc_timestamp();
  return j.dump(2);
}

}  // namespace pairq
