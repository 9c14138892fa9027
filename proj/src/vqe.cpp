// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/vqe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pairq/bfgs.hpp"
#include "pairq/errors.hpp"
#include "pairq/parallel.hpp"

namespace pairq {

using u64 = std::uint64_t;
constexpr double kPi = std::numbers::pi;

std::string to_string(GradMode m) {
  switch (m) {
    case GradMode::Adjoint: return "adjoint";
    case GradMode::ShiftRule: return "shift";
    case GradMode::FiniteDifference: return "fd";
  }
  return "?";
}

GradMode parse_grad_mode(const std::string& s) {
  if (s == "adjoint" || s == "analytic") return GradMode::Adjoint;
  if (s == "shift" || s == "shift-rule") return GradMode::ShiftRule;
  if (s == "fd" || s == "finite-difference") return GradMode::FiniteDifference;
  throw std::invalid_argument("unknown gradient mode '" + s + "'");
}

void OptimizeConfig::validate() const {
  if (!(tol_grad > 0.0)) throw std::invalid_argument("tol_grad must be positive");
  if (!(fd_step > 0.0)) throw std::invalid_argument("fd_step must be positive");
  if (max_iter < 0) throw std::invalid_argument("max_iter must be non-negative");
  if (n_starts < 1) throw std::invalid_argument("n_starts must be at least 1");
  if (!(random_scale >= 0.0)) throw std::invalid_argument("random_scale must be non-negative");
}

namespace {

std::vector<double> gate_angles(const Circuit& c, const ParamMap& params) {
  std::vector<double> a;
  a.reserve(c.gates().size());
  for (const auto& g : c.gates()) a.push_back(g.parametrized() ? g.param.value(params) : 0.0);
  return a;
}

using Replacement = std::vector<std::pair<Gate, double>>;

// Energy with gate `at` swapped for `rep`.
double energy_replaced(const Circuit& c, const std::vector<double>& angles, std::size_t at,
                       const Replacement& rep, const Observable& h) {
  Statevector s(c.n_qubits());
  auto& psi = s.amplitudes();
  const auto& gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (i == at) {
      for (const auto& [g, a] : rep) apply_gate(psi, g, a);
    } else {
      apply_gate(psi, gates[i], angles[i]);
    }
  }
  return h.expectation(psi);
}

struct ShiftTerm {
  std::size_t gate;
  double weight;  // dE/dangle += weight * E(rep)
  Replacement rep;
};

std::vector<ShiftTerm> shift_terms(const Gate& g, std::size_t i, double theta) {
  std::vector<ShiftTerm> out;
  switch (g.kind) {
    case GateKind::Ry:
    case GateKind::Rz:
      out.push_back({i, 0.5, {{g, theta + kPi / 2}}});
      out.push_back({i, -0.5, {{g, theta - kPi / 2}}});
      break;
    case GateKind::CRy: {
      // CRy(t) = CNOT Ry(-t/2) CNOT Ry(t/2) on the target
      const int c = g.qubits[0], t = g.qubits[1];
      const Gate ry = Gate::ry(t, Param::fixed(0.0));
      const Gate cx = Gate::cnot(c, t);
      auto seq = [&](double a, double b) {
        return Replacement{{ry, a}, {cx, 0.0}, {ry, b}, {cx, 0.0}};
      };
      for (int s : {1, -1}) {
        out.push_back({i, 0.25 * s, seq(theta / 2 + s * kPi / 2, -theta / 2)});
        out.push_back({i, -0.25 * s, seq(theta / 2, -theta / 2 + s * kPi / 2)});
      }
      break;
    }
    case GateKind::PauliRotation:
      for (const auto& t : g.generator.terms()) {
        const Gate single = Gate::pauli_rotation(PauliSum({{t.word, 1.0}}), Param::fixed(0.0));
        for (int s : {1, -1})
          out.push_back({i, 0.5 * s * t.coeff.real(), {{g, theta}, {single, s * kPi / 2}}});
      }
      break;
    case GateKind::Excitation: {
      // generator spectrum {0, +-1}: frequencies 1/2 and 1 in theta
      const double dp = (std::numbers::sqrt2 + 1) / (4 * std::numbers::sqrt2);
      const double dm = (std::numbers::sqrt2 - 1) / (4 * std::numbers::sqrt2);
      out.push_back({i, dp, {{g, theta + kPi / 2}}});
      out.push_back({i, -dp, {{g, theta - kPi / 2}}});
      out.push_back({i, -dm, {{g, theta + 3 * kPi / 2}}});
      out.push_back({i, dm, {{g, theta - 3 * kPi / 2}}});
      break;
    }
    default: break;
  }
  return out;
}

std::vector<double> gradient_shift(const Circuit& c, const ParamMap& params, const Observable& h) {
  const auto angles = gate_angles(c, params);
  const auto& names = c.parameters();
  std::vector<ShiftTerm> terms;
  std::vector<std::pair<std::size_t, double>> target;  // parameter index, d angle / d value
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    if (!g.parametrized() || !g.param.symbolic()) continue;
    const auto k = static_cast<std::size_t>(std::find(names.begin(), names.end(), g.param.name) - names.begin());
    for (auto& t : shift_terms(g, i, angles[i])) {
      terms.push_back(std::move(t));
      target.emplace_back(k, g.param.scale);
    }
  }
  std::vector<double> values(terms.size());
  parallel_for(terms.size(), [&](std::size_t j) {
    values[j] = energy_replaced(c, angles, terms[j].gate, terms[j].rep, h);
  });
  std::vector<double> grad(names.size(), 0.0);
  for (std::size_t j = 0; j < terms.size(); ++j)
    grad[target[j].first] += target[j].second * terms[j].weight * values[j];
  return grad;
}

// Energy and gradient from one forward and one backward sweep.
double energy_and_adjoint(const Circuit& c, const ParamMap& params, const Observable& h,
                          std::vector<double>& grad) {
  const auto angles = gate_angles(c, params);
  const auto& names = c.parameters();
  Statevector s(c.n_qubits());
  auto& psi = s.amplitudes();
  const auto& gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) apply_gate(psi, gates[i], angles[i]);
  const double e = h.expectation(psi);
  std::vector<cplx> lambda = h.apply(psi);
  grad.assign(names.size(), 0.0);
  std::vector<cplx> mu;
  for (std::size_t i = gates.size(); i-- > 0;) {
    const Gate& g = gates[i];
    if (g.parametrized() && g.param.symbolic()) {
      mu = psi;
      apply_gate_generator(mu, g);
      cplx z = 0.0;
      for (std::size_t b = 0; b < mu.size(); ++b) z += std::conj(lambda[b]) * mu[b];
      const auto k = static_cast<std::size_t>(std::find(names.begin(), names.end(), g.param.name) - names.begin());
      grad[k] += g.param.scale * z.imag();
    }
    if (i == 0) break;
    apply_gate_inverse(psi, g, angles[i]);
    apply_gate_inverse(lambda, g, angles[i]);
  }
  return e;
}

std::vector<double> gradient_fd(const Circuit& c, const ParamMap& params, const Observable& h, double step) {
  const auto& names = c.parameters();
  std::vector<double> grad(names.size());
  parallel_for(names.size(), [&](std::size_t k) {
    ParamMap p = params;
    const double v = p.count(names[k]) ? p.at(names[k]) : 0.0;
    p[names[k]] = v + step;
    const double up = energy(c, p, h);
    p[names[k]] = v - step;
    const double down = energy(c, p, h);
    grad[k] = (up - down) / (2 * step);
  });
  return grad;
}

std::string describe(const ParamMap& p) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [k, v] : p) os << ' ' << k << '=' << v;
  return os.str();
}

struct Counters {
  int energy = 0;
  int gradient = 0;
};

VQEResult run_start(const Circuit& c, const Observable& h, const OptimizeConfig& cfg,
                    std::vector<double> x0, int index) {
  Counters n;
  const Objective fn = [&](const std::vector<double>& x, std::vector<double>& g) {
    const ParamMap p = c.assign(x);
    double e;
    if (cfg.grad_mode == GradMode::Adjoint) {
      e = energy_and_adjoint(c, p, h, g);
    } else {
      e = energy(c, p, h);
      if (std::isfinite(e)) g = gradient(c, p, h, cfg.grad_mode, cfg.fd_step);
    }
    ++n.energy;
    ++n.gradient;
    if (!std::isfinite(e)) throw OptimizerError("non-finite energy at parameters:" + describe(p));
    return e;
  };
  BfgsOptions opt;
  opt.tol_grad = cfg.tol_grad;
  opt.max_iter = cfg.max_iter;
  const BfgsResult b = bfgs(fn, std::move(x0), opt);
  VQEResult r;
  r.energy = b.f;
  r.params = c.assign(b.x);
  r.iterations = b.iterations;
  r.n_energy_evals = n.energy;
  r.n_gradient_evals = n.gradient;
  r.grad_norm_final = inf_norm(b.grad);
  r.history = b.history;
  r.converged = b.converged;
  r.start_index = index;
  r.message = b.message;
  return r;
}

std::vector<double> start_point(const Circuit& c, const OptimizeConfig& cfg, int index) {
  const std::size_t n = c.n_params();
  const auto kind = index == 0 ? cfg.start : OptimizeConfig::Start::Random;
  switch (kind) {
    case OptimizeConfig::Start::Zero: return std::vector<double>(n, 0.0);
    case OptimizeConfig::Start::Constant: return std::vector<double>(n, cfg.start_value);
    case OptimizeConfig::Start::Given: {
      std::vector<double> x(n, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        auto it = cfg.initial.find(c.parameters()[k]);
        if (it != cfg.initial.end()) x[k] = it->second;
      }
      return x;
    }
    case OptimizeConfig::Start::Random: {
      std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                        static_cast<std::uint32_t>(index)};
      std::mt19937_64 rng(seq);
      std::uniform_real_distribution<double> dist(-cfg.random_scale, cfg.random_scale);
      std::vector<double> x(n);
      for (auto& v : x) v = dist(rng);
      return x;
    }
  }
  return {};
}

}  // namespace

double energy(const Circuit& c, const ParamMap& params, const Observable& h) {
  return h.expectation(simulate(c, params).amplitudes());
}

std::vector<double> gradient(const Circuit& c, const ParamMap& params, const Observable& h, GradMode mode,
                             double fd_step) {
  switch (mode) {
    case GradMode::ShiftRule: return gradient_shift(c, params, h);
    case GradMode::FiniteDifference: return gradient_fd(c, params, h, fd_step);
    case GradMode::Adjoint: {
      std::vector<double> g;
      energy_and_adjoint(c, params, h, g);
      return g;
    }
  }
  return {};
}

std::vector<double> gradient(const Circuit& c, const ParamMap& params, const PauliSum& h, GradMode mode,
                             double fd_step) {
  return gradient(c, params, Observable(h), mode, fd_step);
}

std::vector<double> gradient(const Circuit& c, const ParamMap& params, const PauliSum& h,
                             const std::vector<std::string>& names, GradMode mode, double fd_step) {
  const auto& all = c.parameters();
  std::vector<std::size_t> idx;
  for (const auto& n : names) {
    auto it = std::find(all.begin(), all.end(), n);
    if (it == all.end()) throw std::invalid_argument("parameter '" + n + "' not in circuit");
    idx.push_back(static_cast<std::size_t>(it - all.begin()));
  }
  const auto full = gradient(c, params, h, mode, fd_step);
  std::vector<double> out;
  for (auto k : idx) out.push_back(full[k]);
  return out;
}

VQEResult minimize(const Circuit& c, const PauliSum& h, const OptimizeConfig& config) {
  config.validate();
  const Observable obs(h);
  std::vector<VQEResult> runs(static_cast<std::size_t>(config.n_starts));
  parallel_for(runs.size(), [&](std::size_t k) {
    const int index = static_cast<int>(k);
    runs[k] = run_start(c, obs, config, start_point(c, config, index), index);
  });
  return *std::min_element(runs.begin(), runs.end(), [](const VQEResult& a, const VQEResult& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.start_index < b.start_index;
  });
}

Statevector hcb_to_jw_state(const Statevector& hcb, SpinLayout layout) {
  const int n = hcb.n_qubits();
  Statevector out(2 * n);
  auto& a = out.amplitudes();
  a[0] = 0.0;
  for (u64 b = 0; b < hcb.dim(); ++b) {
    u64 m = 0;
    for (int p = 0; p < n; ++p)
      if (b >> p & 1)
        m |= u64{1} << spin_orbital(p, Spin::Up, n, layout) | u64{1} << spin_orbital(p, Spin::Down, n, layout);
    a[m] = hcb[b];
  }
  return out;
}

namespace {

std::vector<cplx> annihilate(const std::vector<cplx>& psi, int j) {
  const u64 m = u64{1} << j, below = m - 1;
  std::vector<cplx> out(psi.size(), 0.0);
  for (u64 b = 0; b < psi.size(); ++b) {
    if (!(b & m) || psi[b] == cplx(0.0)) continue;
    out[b ^ m] = (std::popcount(b & below) & 1) ? -psi[b] : psi[b];
  }
  return out;
}

double inner_real(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx z = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) z += std::conj(a[i]) * b[i];
  return z.real();
}

}  // namespace

DensityMatrices density_matrices(const Statevector& jw, SpinLayout layout) {
  const int nq = jw.n_qubits();
  if (nq % 2) throw std::invalid_argument("JW state needs an even qubit count");
  if (nq > 20) throw std::invalid_argument("density matrices limited to 20 qubits");
  const int n = nq / 2;
  DensityMatrices dm;
  dm.n_orbitals = n;
  dm.one = Eigen::MatrixXd::Zero(n, n);
  dm.two.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  auto so = [&](int p, int s) { return spin_orbital(p, static_cast<Spin>(s), n, layout); };

  std::vector<std::vector<cplx>> u(static_cast<std::size_t>(nq));
  for (int j = 0; j < nq; ++j) u[j] = annihilate(jw.amplitudes(), j);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < 2; ++s) dm.one(p, q) += inner_real(u[so(p, s)], u[so(q, s)]);

  // v[i][j] = a_j a_i psi
  std::vector<std::vector<std::vector<cplx>>> v(static_cast<std::size_t>(nq));
  for (int i = 0; i < nq; ++i) {
    v[i].resize(nq);
    for (int j = 0; j < nq; ++j)
      if (i != j) v[i][j] = annihilate(u[i], j);
  }
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int p = 0; p < n; ++p)
        for (int r = 0; r < n; ++r) {
          const int ps = so(p, s), rt = so(r, t);
          if (ps == rt) continue;
          for (int q = 0; q < n; ++q)
            for (int x = 0; x < n; ++x) {
              const int qs = so(q, s), xt = so(x, t);
              if (qs == xt) continue;
              const std::size_t k = ((static_cast<std::size_t>(p) * n + q) * n + r) * n + x;
              dm.two[k] += inner_real(v[ps][rt], v[qs][xt]);
            }
        }
  return dm;
}

double rdm_energy(const MolecularSystem& sys, const DensityMatrices& dm) {
  if (dm.n_orbitals != sys.n_orbitals) throw std::invalid_argument("RDM size does not match system");
  double e = sys.constant_energy() + (sys.h.array() * dm.one.array()).sum();
  for (std::size_t k = 0; k < sys.g.size(); ++k) e += 0.5 * sys.g[k] * dm.two[k];
  return e;
}

namespace {

struct ActiveProblem {
  MolecularSystem system;
  Circuit circuit;
  PauliSum hamiltonian;
};

ActiveProblem make_problem(const MolecularSystem& full, const std::vector<int>& active,
                           const std::vector<int>& frozen, const AnsatzSpec& spec, const PairSets* fixed) {
  ActiveProblem pb{apply_active_space(full, active, frozen), Circuit(), PauliSum()};
  if (fixed) {
    pb.system.pair_sets = *fixed;
    pb.system.default_pairs = false;
  }
  pb.circuit = build_ansatz(pb.system, spec);
  pb.hamiltonian = spec.hcb ? build_hcb_hamiltonian(pb.system) : build_qubit_hamiltonian(pb.system, spec.layout);
  return pb;
}

}  // namespace

OrbitalOptimizeResult optimize_orbitals(const MolecularSystem& sys, const std::vector<int>& active,
                                        const std::vector<int>& frozen, const AnsatzSpec& spec,
                                        const OrbitalOptimizeConfig& config) {
  spec.validate();
  if (!(config.energy_tol > 0.0) || !(config.fd_step > 0.0) || config.max_macro < 1)
    throw std::invalid_argument("invalid orbital optimization settings");
  const int n = sys.n_orbitals;
  std::vector<int> kind(static_cast<std::size_t>(n), 2);  // 0 frozen, 1 active, 2 discarded
  for (int f : frozen) kind.at(static_cast<std::size_t>(f)) = 0;
  for (int a : active) kind.at(static_cast<std::size_t>(a)) = 1;
  std::vector<std::pair<int, int>> rotations;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (kind[i] == 1 || kind[j] == 1 || kind[i] != kind[j]) rotations.emplace_back(i, j);

  OrbitalOptimizeResult out;
  out.system = sys;
  out.orbitals = Eigen::MatrixXd::Identity(n, n);
  ActiveProblem pb = make_problem(sys, active, frozen, spec, nullptr);
  const PairSets pairs = pb.system.pair_sets;
  OptimizeConfig vqe_cfg = config.vqe;
  double previous = 0.0;

  for (int it = 0; it < config.max_macro; ++it) {
    out.result = minimize(pb.circuit, pb.hamiltonian, vqe_cfg);
    out.macro_energies.push_back(out.result.energy);
    out.macro_iterations = it + 1;
    out.active_system = pb.system;
    if (!config.optimize_orbitals || rotations.empty()) return out;
    if (it > 0 && std::abs(previous - out.result.energy) < config.energy_tol) return out;
    previous = out.result.energy;

    Statevector psi = simulate(pb.circuit, out.result.params);
    if (spec.hcb) psi = hcb_to_jw_state(psi, spec.layout);
    const DensityMatrices dm = density_matrices(psi, spec.layout);
    const MolecularSystem base = out.system;
    auto kappa_of = [&](const std::vector<double>& x) {
      OrbitalRotation rot = OrbitalRotation::zero(n);
      for (std::size_t k = 0; k < x.size(); ++k) {
        rot.kappa(rotations[k].first, rotations[k].second) = x[k];
        rot.kappa(rotations[k].second, rotations[k].first) = -x[k];
      }
      return rot;
    };
    auto orbital_energy = [&](const std::vector<double>& x) {
      return rdm_energy(apply_active_space(rotate_orbitals(base, kappa_of(x)), active, frozen), dm);
    };
    const Objective fn = [&](const std::vector<double>& x, std::vector<double>& g) {
      g.assign(x.size(), 0.0);
      parallel_for(x.size(), [&](std::size_t k) {
        std::vector<double> y = x;
        y[k] = x[k] + config.fd_step;
        const double up = orbital_energy(y);
        y[k] = x[k] - config.fd_step;
        g[k] = (up - orbital_energy(y)) / (2 * config.fd_step);
      });
      return orbital_energy(x);
    };
    BfgsOptions opt;
    opt.tol_grad = config.tol_kappa_grad;
    opt.max_iter = config.max_kappa_iter;
    const BfgsResult b = bfgs(fn, std::vector<double>(rotations.size(), 0.0), opt);
    if (!std::isfinite(b.f)) throw OptimizerError("non-finite energy in orbital step");
    const OrbitalRotation rot = kappa_of(b.x);
    out.system = rotate_orbitals(base, rot);
    out.orbitals = out.orbitals * rot.unitary();
    pb = make_problem(out.system, active, frozen, spec, &pairs);
    vqe_cfg.start = OptimizeConfig::Start::Given;
    vqe_cfg.initial = out.result.params;
    vqe_cfg.n_starts = 1;
  }
  throw OptimizerError("orbital optimization did not converge in " + std::to_string(config.max_macro) +
                       " macro-iterations");
}

OrbitalOptimizeResult optimize_orbitals(const MolecularSystem& sys, const AnsatzSpec& spec,
                                        const OrbitalOptimizeConfig& config) {
  std::vector<int> active(static_cast<std::size_t>(sys.n_orbitals));
  for (int p = 0; p < sys.n_orbitals; ++p) active[static_cast<std::size_t>(p)] = p;
  return optimize_orbitals(sys, active, {}, spec, config);
}

}  // namespace pairq
