// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "pairq/ansatz.hpp"
#include "pairq/bfgs.hpp"
#include "pairq/compile.hpp"
#include "pairq/errors.hpp"
#include "pairq/io.hpp"
#include "pairq/spectrum.hpp"
#include "pairq/vqe.hpp"
#include "support.hpp"

using namespace pairq;
using support::fixture;

namespace {

double fci(const MolecularSystem& s) {
  return exact_spectrum(build_qubit_hamiltonian(s), s.n_electrons, false).ground_energy();
}

// Central differences computed here, independent of the library's own mode.
std::vector<double> central_difference(const Circuit& c, const ParamMap& p, const Observable& h, double step) {
  std::vector<double> g;
  for (const auto& name : c.parameters()) {
    ParamMap up = p, down = p;
    up[name] += step;
    down[name] -= step;
    g.push_back((energy(c, up, h) - energy(c, down, h)) / (2 * step));
  }
  return g;
}

}  // namespace

TEST_CASE("BFGS minimizes the Rosenbrock function with a monotone history") {
  const Objective rosen = [](const std::vector<double>& x, std::vector<double>& g) {
    const double a = 1 - x[0], b = x[1] - x[0] * x[0];
    g = {-2 * a - 400 * x[0] * b, 200 * b};
    return a * a + 100 * b * b;
  };
  const BfgsResult r = bfgs(rosen, {-1.2, 1.0});
  CHECK(r.converged);
  CHECK(std::abs(r.x[0] - 1.0) < 1e-5);
  CHECK(std::abs(r.x[1] - 1.0) < 1e-5);
  for (std::size_t k = 1; k < r.history.size(); ++k) CHECK(r.history[k] <= r.history[k - 1]);
  const BfgsResult at_min = bfgs(rosen, {1.0, 1.0});
  CHECK(at_min.iterations == 0);
}

TEST_CASE("gradients: adjoint and shift rules match central differences") {
  const LoadedSystem ls = load_system(fixture("h2_sto-3g/r0.74.fcidump"));
  const Circuit spa = build_spa(ls.active);
  const Observable h(build_qubit_hamiltonian(ls.active));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const ParamMap p = support::random_params(spa, rng, 3.0);
    const auto fd = central_difference(spa, p, h, 1e-4);
    for (auto mode : {GradMode::Adjoint, GradMode::ShiftRule, GradMode::FiniteDifference}) {
      const auto g = gradient(spa, p, h, mode);
      for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(g[k] - fd[k]) < 1e-6);
    }
    // compiled circuits carry the same parameters
    for (int level : {0, 1, 2}) {
      const auto g = gradient(compile(spa, level), p, h, GradMode::ShiftRule);
      for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(g[k] - fd[k]) < 1e-6);
    }
  }
}

TEST_CASE("gradients for every ansatz flavor on a (4,8) system") {
  const LoadedSystem ls = load_system(fixture("beh2_sto-3g/r1.30.fcidump"));
  const Observable h(build_qubit_hamiltonian(ls.active));
  std::mt19937_64 rng(2);
  for (const char* name : {"SPA", "UpCCD", "UpCCSD", "UpCCGSD", "2-UpCCGASD", "SPA+GS"}) {
    CAPTURE(name);
    const Circuit c = build_ansatz(ls.active, parse_ansatz(name));
    for (int t = 0; t < 3; ++t) {
      const ParamMap p = support::random_params(c, rng, 1.5);
      const auto fd = central_difference(c, p, h, 1e-4);
      const auto adj = gradient(c, p, h, GradMode::Adjoint);
      const auto shift = gradient(c, p, h, GradMode::ShiftRule);
      for (std::size_t k = 0; k < fd.size(); ++k) {
        CHECK(std::abs(adj[k] - fd[k]) < 1e-6);
        CHECK(std::abs(shift[k] - fd[k]) < 1e-6);
      }
    }
  }
}

TEST_CASE("gradient special cases") {
  const LoadedSystem ls = load_system(fixture("beh2_sto-3g/r1.30.fcidump"));
  // ladder with three orbitals in one pair: at zero the second excitation sees an empty source
  PairStructure ps{4, {{0, 2, 3}, {1}}};
  const Circuit c = build_spa(ps);
  const Observable h(build_qubit_hamiltonian(ls.active));
  ParamMap zero;
  for (const auto& n : c.parameters()) zero[n] = 0.0;
  const auto g = gradient(c, zero, h, GradMode::ShiftRule);
  REQUIRE(g.size() == 2);
  CHECK(std::abs(g[1]) < 1e-14);

  const PauliSum constant = PauliSum::constant(2.5);
  for (double x : gradient(c, {{"t_0_0", 0.3}, {"t_0_1", -0.2}}, constant, GradMode::ShiftRule))
    CHECK(std::abs(x) < 1e-14);
  CHECK_THROWS_AS(gradient(c, zero, h.sum(), std::vector<std::string>{"nope"}), std::invalid_argument);
  CHECK(gradient(c, zero, h.sum(), std::vector<std::string>{"t_0_1"}).size() == 1);
}

TEST_CASE("SPA on H2 reaches FCI from a zero start") {
  const LoadedSystem ls = load_system(fixture("h2_sto-3g/r0.74.fcidump"));
  const VQEResult r = minimize(build_spa(ls.active), build_qubit_hamiltonian(ls.active));
  CHECK(r.converged);
  CHECK(r.iterations <= 15);
  CHECK(std::abs(r.energy - fci(ls.active)) < 1e-8);
  for (std::size_t k = 1; k < r.history.size(); ++k) CHECK(r.history[k] <= r.history[k - 1]);

  OptimizeConfig again;
  again.start = OptimizeConfig::Start::Given;
  again.initial = r.params;
  const VQEResult s = minimize(build_spa(ls.active), build_qubit_hamiltonian(ls.active), again);
  CHECK(s.iterations <= 1);
  CHECK(std::abs(s.energy - r.energy) < 1e-12);
}

TEST_CASE("SPA on BeH2 (4,8) converges in at most 15 iterations for every gradient mode") {
  const LoadedSystem ls = load_system(fixture("beh2_sto-3g/r1.30.fcidump"));
  const Circuit c = build_spa(ls.active);
  const PauliSum h = build_qubit_hamiltonian(ls.active);
  double reference = 0.0;
  for (auto mode : {GradMode::Adjoint, GradMode::ShiftRule, GradMode::FiniteDifference}) {
    OptimizeConfig cfg;
    cfg.grad_mode = mode;
    const VQEResult r = minimize(c, h, cfg);
    CHECK(r.converged);
    CHECK(r.iterations <= 15);
    CHECK(r.energy >= fci(ls.active) - 1e-10);
    if (mode == GradMode::Adjoint) reference = r.energy;
    CHECK(std::abs(r.energy - reference) < 1e-8);
  }
}

TEST_CASE("multi-start is deterministic and never worse than the zero start") {
  const LoadedSystem ls = load_system(fixture("beh2_sto-3g/r2.50.fcidump"));
  const Circuit c = build_ansatz(ls.active, parse_ansatz("UpCCGD"));
  const PauliSum h = build_qubit_hamiltonian(ls.active);
  OptimizeConfig cfg;
  cfg.n_starts = 4;
  cfg.seed = 42;
  const VQEResult a = minimize(c, h, cfg);
  const VQEResult b = minimize(c, h, cfg);
  CHECK(a.energy == b.energy);
  CHECK(a.params == b.params);
  CHECK(a.start_index == b.start_index);
  CHECK(a.iterations == b.iterations);
  const VQEResult zero = minimize(c, h);
  CHECK(a.energy <= zero.energy + 1e-12);
  cfg.n_starts = 0;
  CHECK_THROWS(minimize(c, h, cfg));
}

TEST_CASE("non-finite energies raise an optimizer error") {
  MolecularSystem s = MolecularSystem::zeros(2, 2);
  s.h(0, 0) = -1.0;
  s.h(1, 1) = std::numeric_limits<double>::quiet_NaN();
  s.pair_sets = {{0, 1}};
  s.default_pairs = false;
  CHECK_THROWS_AS(minimize(build_spa(s), build_qubit_hamiltonian(s)), OptimizerError);
}

TEST_CASE("density matrices reproduce the energy") {
  const LoadedSystem ls = load_system(fixture("beh2_sto-3g/r1.30.fcidump"));
  std::mt19937_64 rng(3);
  for (const char* name : {"SPA", "UpCCGSD", "HCB-UpCCGD"}) {
    CAPTURE(name);
    const AnsatzSpec spec = parse_ansatz(name);
    const Circuit c = build_ansatz(ls.active, spec);
    const ParamMap p = support::random_params(c, rng);
    Statevector psi = simulate(c, p);
    const PauliSum h = spec.hcb ? build_hcb_hamiltonian(ls.active) : build_qubit_hamiltonian(ls.active);
    const double e = expectation(psi, h);
    if (spec.hcb) psi = hcb_to_jw_state(psi);
    const DensityMatrices dm = density_matrices(psi);
    CHECK(std::abs(dm.one.trace() - ls.active.n_electrons) < 1e-12);
    CHECK(std::abs(rdm_energy(ls.active, dm) - e) < 1e-10);
  }
}

TEST_CASE("orbital-optimized SPA on the 4-orbital H2 reaches FCI") {
  const LoadedSystem ls = load_system(fixture("h2_6-31g/r0.74.fcidump"));
  const OrbitalOptimizeResult r = optimize_orbitals(ls.full, ls.active_orbitals, ls.frozen, parse_ansatz("SPA"));
  CHECK(std::abs(r.result.energy - fci(ls.active)) < 1e-6);
  for (std::size_t k = 1; k < r.macro_energies.size(); ++k)
    CHECK(r.macro_energies[k] <= r.macro_energies[k - 1] + 1e-10);
  // final orbitals are orthonormal and the reported system matches them
  const auto& u = r.orbitals;
  CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(std::abs(fci(r.active_system) - fci(ls.active)) < 1e-8);
}

TEST_CASE("orbital optimization: skipping the orbital step equals plain minimize") {
  const LoadedSystem ls = load_system(fixture("beh2_sto-3g/r1.30.fcidump"));
  OrbitalOptimizeConfig cfg;
  cfg.optimize_orbitals = false;
  const auto r = optimize_orbitals(ls.full, ls.active_orbitals, ls.frozen, parse_ansatz("SPA"), cfg);
  const VQEResult plain = minimize(build_spa(ls.active), build_qubit_hamiltonian(ls.active));
  CHECK(r.result.energy == plain.energy);
  CHECK(r.macro_iterations == 1);
}

TEST_CASE("orbital-optimized SPA on BeH2 (4,8) is monotone") {
  const LoadedSystem ls = load_system(fixture("beh2_sto-3g/r1.30.fcidump"));
  const auto r = optimize_orbitals(ls.full, ls.active_orbitals, ls.frozen, parse_ansatz("SPA"));
  REQUIRE(r.macro_energies.size() >= 2);
  for (std::size_t k = 1; k < r.macro_energies.size(); ++k)
    CHECK(r.macro_energies[k] <= r.macro_energies[k - 1] + 1e-10);
  CHECK(r.result.energy < r.macro_energies.front());
  OrbitalOptimizeConfig capped;
  capped.max_macro = 1;
  CHECK_THROWS_AS(optimize_orbitals(ls.full, ls.active_orbitals, ls.frozen, parse_ansatz("SPA"), capped), OptimizerError);
}
