// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "pairq/circuit.hpp"
#include "pairq/molecule.hpp"
#include "pairq/statevector.hpp"

namespace pairq {

// Product of one-pair states: pair k occupies orbital pair_sets[k][l] with
// amplitude amplitudes[k][l]. For a JW register both spin orbitals of the
// orbital are filled; for an HCB register its single qubit is.
struct PairWavefunction {
  int n_orbitals = 0;
  Register reg = Register::JordanWigner;
  SpinLayout layout = SpinLayout::Interleaved;
  PairSets pair_sets;
  std::vector<std::vector<cplx>> amplitudes;

  int n_qubits() const { return reg == Register::JordanWigner ? 2 * n_orbitals : n_orbitals; }
  std::size_t stored_amplitudes() const;
  // Qubit indices occupied when pair k sits in its l-th orbital.
  std::vector<int> occupied_qubits(int orbital) const;
  Statevector embed(int max_qubits = Statevector::kDefaultMaxQubits) const;
};

// Simulates each pair block independently. Blocks come from the connected
// components of the gate graph unless explicit pair sets are given.
PairWavefunction simulate_separable(const Circuit& c, const ParamMap& params,
                                    const std::optional<PairSets>& pairs = std::nullopt);

double expectation(const PairWavefunction& w, const PauliSum& h);
double variance(const PairWavefunction& w, const PauliSum& h);

}  // namespace pairq
