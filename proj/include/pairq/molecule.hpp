// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "pairq/fermion.hpp"
#include "pairq/pauli.hpp"

namespace pairq {

// Ordered orbital lists; element 0 of each list is the pair's reference orbital.
using PairSets = std::vector<std::vector<int>>;

// Enough structure to build SPA circuits without integrals.
struct PairStructure {
  int n_orbitals = 0;
  PairSets pair_sets;
};

struct MolecularSystem {
  int n_electrons = 0;
  int n_orbitals = 0;
  double e_nuclear = 0.0;
  // Constant from folded frozen-core orbitals.
  double e_core = 0.0;
  Eigen::MatrixXd h;
  // Chemist-notation (pq|rs), dense, index ((p*n + q)*n + r)*n + s.
  std::vector<double> g;
  PairSets pair_sets;
  // True while pair_sets is the automatic assignment; it is then recomputed
  // after active-space folding instead of being restricted.
  bool default_pairs = true;
  // Indices (in the parsed file) of folded orbitals and of the orbitals kept.
  std::vector<int> frozen;
  std::vector<int> orbital_labels;
  std::vector<int> orbsym;

  static MolecularSystem zeros(int n_orbitals, int n_electrons);

  double eri(int p, int q, int r, int s) const {
    return g[((static_cast<std::size_t>(p) * n_orbitals + q) * n_orbitals + r) * n_orbitals + s];
  }
  // Writes all 8 symmetry-equivalent slots.
  void set_eri(int p, int q, int r, int s, double v);
  double constant_energy() const { return e_nuclear + e_core; }
  int n_pairs() const { return n_electrons / 2; }
  int n_qubits() const { return 2 * n_orbitals; }
  PairStructure pair_structure() const { return {n_orbitals, pair_sets}; }

  // Throws InputError when an invariant is violated.
  void validate(double tol = 1e-10) const;
};

MolecularSystem parse_fcidump(std::istream& in);
MolecularSystem parse_fcidump(const std::string& text);
MolecularSystem read_fcidump(const std::string& path);
void write_fcidump(std::ostream& out, const MolecularSystem& sys);

// Sorts orbitals by diagonal h; the k lowest become references, the rest are
// dealt round-robin in the same order.
PairSets default_pair_sets(const Eigen::MatrixXd& h, int n_pairs);

PauliSum build_qubit_hamiltonian(const MolecularSystem& sys,
                                 SpinLayout layout = SpinLayout::Interleaved);
PauliSum build_hcb_hamiltonian(const MolecularSystem& sys);

// active and frozen are indices into sys; the result keeps only the active
// orbitals, in the given order.
MolecularSystem apply_active_space(const MolecularSystem& sys, const std::vector<int>& active,
                                   const std::vector<int>& frozen);

struct OrbitalRotation {
  Eigen::MatrixXd kappa;

  static OrbitalRotation zero(int n) { return {Eigen::MatrixXd::Zero(n, n)}; }
  // kappa(i, j) = -kappa(j, i) = values in row-major lower-triangle order (i > j).
  static OrbitalRotation from_lower_triangle(int n, const std::vector<double>& values);
  Eigen::MatrixXd unitary() const;
};

MolecularSystem rotate_orbitals(const MolecularSystem& sys, const OrbitalRotation& rot);
// Same transform with an explicit orthogonal matrix C (columns = new orbitals).
MolecularSystem transform_orbitals(const MolecularSystem& sys, const Eigen::MatrixXd& c);

}  // namespace pairq
