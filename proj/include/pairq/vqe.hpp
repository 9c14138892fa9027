// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "pairq/ansatz.hpp"
#include "pairq/circuit.hpp"
#include "pairq/molecule.hpp"
#include "pairq/pauli.hpp"
#include "pairq/statevector.hpp"

namespace pairq {

// ShiftRule and Adjoint are both exact; Adjoint costs three circuit passes
// regardless of the parameter count.
enum class GradMode { Adjoint, ShiftRule, FiniteDifference };

std::string to_string(GradMode m);
GradMode parse_grad_mode(const std::string& s);

struct OptimizeConfig {
  enum class Start { Zero, Constant, Random, Given };

  Start start = Start::Zero;
  double start_value = 0.1;             // Constant
  double random_scale = 1.5707963267948966;  // Random: uniform in [-scale, scale]
  ParamMap initial;                     // Given; missing names start at 0
  GradMode grad_mode = GradMode::Adjoint;
  double fd_step = 1e-4;
  double tol_grad = 1e-5;
  int max_iter = 200;
  // Start 0 uses `start`; starts 1.. are uniform random draws.
  int n_starts = 1;
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

struct VQEResult {
  double energy = 0.0;
  ParamMap params;
  int iterations = 0;
  int n_energy_evals = 0;
  int n_gradient_evals = 0;
  double grad_norm_final = 0.0;
  std::vector<double> history;
  bool converged = false;
  int start_index = 0;
  std::string message;
};

double energy(const Circuit& c, const ParamMap& params, const Observable& h);

// dE/dvalue for every circuit parameter, in Circuit::parameters() order.
std::vector<double> gradient(const Circuit& c, const ParamMap& params, const PauliSum& h,
                             GradMode mode = GradMode::ShiftRule, double fd_step = 1e-4);
std::vector<double> gradient(const Circuit& c, const ParamMap& params, const Observable& h,
                             GradMode mode = GradMode::ShiftRule, double fd_step = 1e-4);
// Restricted to the named parameters; throws std::invalid_argument for names
// the circuit does not carry.
std::vector<double> gradient(const Circuit& c, const ParamMap& params, const PauliSum& h,
                             const std::vector<std::string>& names,
                             GradMode mode = GradMode::ShiftRule, double fd_step = 1e-4);

// Throws OptimizerError on a non-finite energy.
VQEResult minimize(const Circuit& c, const PauliSum& h, const OptimizeConfig& config = {});

// Embeds an HCB state into the JW register (pair occupied -> both spins set).
Statevector hcb_to_jw_state(const Statevector& hcb, SpinLayout layout = SpinLayout::Interleaved);

// Spin-summed reduced density matrices of a JW state:
// gamma(p,q) = sum_s <a+_ps a_qs>, Gamma[pqrs] = sum_st <a+_ps a+_rt a_st a_qs>,
// so that E = E_const + sum h gamma + 1/2 sum (pq|rs) Gamma.
struct DensityMatrices {
  int n_orbitals = 0;
  Eigen::MatrixXd one;
  std::vector<double> two;  // same index order as MolecularSystem::g

  double two_body(int p, int q, int r, int s) const {
    return two[((static_cast<std::size_t>(p) * n_orbitals + q) * n_orbitals + r) * n_orbitals + s];
  }
};
DensityMatrices density_matrices(const Statevector& jw, SpinLayout layout = SpinLayout::Interleaved);
double rdm_energy(const MolecularSystem& sys, const DensityMatrices& dm);

struct OrbitalOptimizeConfig {
  OptimizeConfig vqe;
  double energy_tol = 1e-7;
  int max_macro = 50;
  double fd_step = 1e-5;
  double tol_kappa_grad = 1e-6;
  int max_kappa_iter = 200;
  // False keeps kappa at zero: a single plain minimize().
  bool optimize_orbitals = true;
};

struct OrbitalOptimizeResult {
  MolecularSystem system;         // full system in the final orbital basis
  MolecularSystem active_system;  // folded active space the circuit runs on
  Eigen::MatrixXd orbitals;       // accumulated rotation, columns = final orbitals
  VQEResult result;
  std::vector<double> macro_energies;
  int macro_iterations = 0;
};

// Alternates angle optimization and an orbital step until successive
// energies differ by less than energy_tol. active/frozen index sys; rotations
// among frozen orbitals and among discarded orbitals are redundant and skipped.
// Throws OptimizerError if max_macro is exceeded.
OrbitalOptimizeResult optimize_orbitals(const MolecularSystem& sys, const std::vector<int>& active,
                                        const std::vector<int>& frozen, const AnsatzSpec& spec,
                                        const OrbitalOptimizeConfig& config = {});
OrbitalOptimizeResult optimize_orbitals(const MolecularSystem& sys, const AnsatzSpec& spec,
                                        const OrbitalOptimizeConfig& config = {});

}  // namespace pairq
