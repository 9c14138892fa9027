// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "pairq/pauli.hpp"
#include "pairq/statevector.hpp"

namespace pairq {

struct SpectrumResult {
  int n_qubits = 0;
  std::optional<int> n_particles;
  // Basis states of the diagonalized sector (all states when no filter).
  std::vector<std::uint64_t> sector;
  Eigen::VectorXd eigenvalues;  // ascending
  // Columns are eigenvectors in sector coordinates; empty when not requested.
  Eigen::MatrixXcd eigenvectors;

  std::size_t size() const { return static_cast<std::size_t>(eigenvalues.size()); }
  double ground_energy() const { return eigenvalues(0); }
  Statevector state(std::size_t k) const;
  // |<E_k|psi>|^2 for every eigenvector.
  std::vector<double> fidelities(const Statevector& psi) const;
};

// Dense diagonalization, optionally restricted to a fixed Hamming weight.
SpectrumResult exact_spectrum(const PauliSum& h, std::optional<int> n_particles = std::nullopt,
                              bool vectors = true, int n_qubits = -1, int max_qubits = 16);

}  // namespace pairq
