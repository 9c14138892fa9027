// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairq/ansatz.hpp"
#include "pairq/circuit.hpp"
#include "pairq/io.hpp"
#include "pairq/vqe.hpp"

namespace pairq {

inline constexpr const char* kVersion = "0.1.0";

struct RunReport {
  std::string input;
  std::string ansatz;
  int level = -1;  // -1: native gates
  ResourceReport resources;
  VQEResult result;
  std::string grad_mode = "adjoint";
  int n_starts = 1;
  std::uint64_t seed = 0;
  bool hcb = false;
  bool orbital_optimized = false;
  std::vector<double> macro_energies;
  std::optional<double> fci;
  std::string fci_source;  // "exact" or "reference"
  std::optional<std::pair<double, double>> variance;  // (HF, optimized)
  std::string started;
  std::string finished;
};

struct OptimizeRequest {
  std::string fcidump;
  std::vector<int> frozen;  // both empty: sidecar active space, else all orbitals
  std::vector<int> active;
  AnsatzSpec ansatz;
  OptimizeConfig config;
  int level = -1;  // resource report level; -1 picks 2 for SPA circuits, else 1
  bool orbital_optimization = false;
  bool variance = false;
  bool fci = false;
  std::string dump_state;  // statevector output path, empty for none
};

// Loads, optimizes and diagnoses one system. The circuit runs on the native
// (uncompiled) gates; compiled circuits are equivalent on the reference input.
RunReport run_optimize(const OptimizeRequest& request);

// Exact diagonalization up to max_qubits, else the sidecar value when it
// belongs to the same active space. Second member: "exact" or "reference".
std::optional<std::pair<double, std::string>> fci_energy(const LoadedSystem& ls, int max_qubits = 16);

int default_level(const AnsatzSpec& spec);

// ISO 8601, UTC, second resolution.
std::string utc_timestamp();

std::string to_json(const RunReport& r, int indent = 2);
std::string error_json(const std::string& kind, const std::string& message, int exit_code,
                       const std::string& input = "", const std::string& ansatz = "");

}  // namespace pairq
