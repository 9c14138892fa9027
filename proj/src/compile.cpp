// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/compile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "pairq/errors.hpp"

namespace pairq {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void cz(Circuit& out, int c, int t) {
  out.add(Gate::h(t));
  out.add(Gate::cnot(c, t));
  out.add(Gate::h(t));
}

// Writes G = sign * Z_S * Q where Q is the Z-free excitation generator on the
// gate's own qubits. Returns false when G has another shape.
bool split_parity(const Gate& g, std::vector<int>& parity, double& sign) {
  const PauliSum full = g.generator_sum();
  const PauliSum bare = qubit_excitation_generator(g.creators(), g.annihilators());
  std::set<int> own(g.qubits.begin(), g.qubits.end());
  PauliWord zs;
  parity.clear();
  for (const auto& [q, a] : full.terms().front().word.factors())
    if (!own.count(q)) {
      if (a != Axis::Z) return false;
      zs.set(q, Axis::Z);
      parity.push_back(q);
    }
  const PauliSum shifted = PauliSum({{zs, 1.0}}) * bare;
  if (full.distance(shifted) < 1e-12) {
    sign = 1.0;
    return true;
  }
  if (full.distance(-1.0 * shifted) < 1e-12) {
    sign = -1.0;
    return true;
  }
  return false;
}

void append_excitation_level0(Circuit& out, const Gate& g) {
  const PauliSum gen = g.generator_sum();
  for (const auto& t : gen.terms()) append_pauli_gadget(out, t, g.param);
}

void append_excitation_level1(Circuit& out, const Gate& g) {
  std::vector<int> parity;
  double sign = 1.0;
  const std::size_t m = g.qubits.size() / 2;
  if ((m != 1 && m != 2) || !split_parity(g, parity, sign)) {
    append_excitation_level0(out, g);
    return;
  }
  const Param p = g.param.scaled(sign);
  const int anchor = g.qubits.front();
  auto ladder = [&](bool forward) {
    if (parity.size() < 2) return;
    if (forward)
      for (std::size_t i = 0; i + 1 < parity.size(); ++i) out.add(Gate::cnot(parity[i], parity[i + 1]));
    else
      for (std::size_t i = parity.size() - 1; i > 0; --i) out.add(Gate::cnot(parity[i - 1], parity[i]));
  };
  if (!parity.empty()) {
    ladder(true);
    cz(out, parity.back(), anchor);
  }
  if (m == 1)
    append_givens(out, g.qubits[0], g.qubits[1], p);
  else
    append_double_block(out, g.qubits[0], g.qubits[1], g.qubits[2], g.qubits[3], p);
  if (!parity.empty()) {
    cz(out, parity.back(), anchor);
    ladder(false);
  }
}

void append_level(Circuit& out, const Gate& g, int level) {
  switch (g.kind) {
    case GateKind::Excitation:
      if (level == 0) append_excitation_level0(out, g);
      else append_excitation_level1(out, g);
      return;
    case GateKind::PauliRotation:
      for (const auto& t : g.generator.terms()) append_pauli_gadget(out, t, g.param);
      return;
    default: {
      Gate copy = g;
      copy.role = GateRole::Body;
      out.add(copy);
    }
  }
}

// Level 2 for the part before the bridge: X on references, then per
// excitation (source s -> target t) Ry or CRy(s -> t) followed by CNOT(t -> s).
void compile_spa_region(Circuit& out, const std::vector<Gate>& region) {
  std::set<int> reached;   // qubits that may hold the pair
  std::set<int> certain;   // qubits occupied with certainty
  for (const auto& g : region) {
    if (g.kind == GateKind::X && g.role == GateRole::Reference) {
      reached.insert(g.qubits[0]);
      certain.insert(g.qubits[0]);
      Gate x = g;
      x.role = GateRole::Body;
      out.add(x);
      continue;
    }
    if (g.kind != GateKind::Excitation || g.excitation != ExcitationType::Hcb)
      throw std::invalid_argument("level 2 needs an SPA circuit: unexpected " + kind_name(g) +
                                  " before the bridge");
    const int t = g.qubits[0];
    const int s = g.qubits[1];
    if (!reached.count(s) || reached.count(t))
      throw std::invalid_argument("level 2 needs an SPA circuit: excitation " + std::to_string(s) +
                                  " -> " + std::to_string(t) + " breaks the pair product structure");
    if (certain.count(s)) out.add(Gate::ry(t, g.param));
    else out.add(Gate::cry(s, t, g.param));
    out.add(Gate::cnot(t, s));
    certain.erase(s);
    reached.insert(t);
  }
}

}  // namespace

void append_pauli_gadget(Circuit& out, const PauliString& term, const Param& param) {
  if (std::abs(term.coeff.imag()) > 1e-12)
    throw std::invalid_argument("Pauli gadget needs a real coefficient");
  const auto f = term.word.factors();
  if (f.empty()) return;  // global phase
  std::vector<int> q;
  for (const auto& [k, a] : f) {
    q.push_back(k);
    if (a == Axis::X) out.add(Gate::h(k));
    if (a == Axis::Y) {
      out.add(Gate::rz(k, Param::fixed(-kHalfPi)));
      out.add(Gate::h(k));
    }
  }
  for (std::size_t i = 0; i + 1 < q.size(); ++i) out.add(Gate::cnot(q[i], q[i + 1]));
  out.add(Gate::rz(q.back(), param.scaled(term.coeff.real())));
  for (std::size_t i = q.size() - 1; i > 0; --i) out.add(Gate::cnot(q[i - 1], q[i]));
  for (const auto& [k, a] : f) {
    if (a == Axis::X) out.add(Gate::h(k));
    if (a == Axis::Y) {
      out.add(Gate::h(k));
      out.add(Gate::rz(k, Param::fixed(kHalfPi)));
    }
  }
}

// exp(-i theta/2 G), G = i(s+_a s-_c s+_b s-_d - h.c.): a, b gain the pair, c, d lose it.
void append_double_block(Circuit& out, int a, int b, int c, int d, const Param& param) {
  out.add(Gate::cnot(d, c));
  out.add(Gate::cnot(b, a));
  out.add(Gate::cnot(d, b));
  // Multiplexed Ry on d over controls (a, b, c) along a Gray cycle.
  const int toggles[7] = {a, c, a, b, a, c, a};
  const double coef[8] = {-0.125, -0.125, -0.125, -0.125, 0.125, 0.125, 0.125, 0.125};
  out.add(Gate::ry(d, param.scaled(coef[0])));
  for (int k = 0; k < 7; ++k) {
    cz(out, toggles[k], d);
    out.add(Gate::ry(d, param.scaled(coef[k + 1])));
  }
  // Closing CZ(b, d) merged with CNOT(d, b): controlled-Y plus S^dagger on d.
  out.add(Gate::rz(b, Param::fixed(-kHalfPi)));
  out.add(Gate::cnot(d, b));
  out.add(Gate::rz(b, Param::fixed(kHalfPi)));
  out.add(Gate::rz(d, Param::fixed(-kHalfPi)));
  out.add(Gate::cnot(b, a));
  out.add(Gate::cnot(d, c));
}

// exp(-i theta/2 G), G = i(s+_p s-_q - h.c.).
void append_givens(Circuit& out, int creator, int annihilator, const Param& param) {
  out.add(Gate::cnot(creator, annihilator));
  out.add(Gate::cry(annihilator, creator, param));
  out.add(Gate::cnot(creator, annihilator));
}

Circuit lower_to_jw(const Circuit& circuit) {
  if (circuit.register_kind() != Register::JordanWigner || !circuit.has_bridge()) return circuit;
  const int n = circuit.n_orbitals();
  const SpinLayout layout = circuit.layout();
  std::vector<int> orbital_of(circuit.n_qubits(), -1);
  for (int p = 0; p < n; ++p) orbital_of[spin_orbital(p, Spin::Up, n, layout)] = p;
  auto up = [&](int p) { return spin_orbital(p, Spin::Up, n, layout); };
  auto dn = [&](int p) { return spin_orbital(p, Spin::Down, n, layout); };

  Circuit out(circuit.n_qubits(), Register::JordanWigner, layout);
  bool after = false;
  for (const auto& g : circuit.gates()) {
    if (g.role == GateRole::Bridge) {
      after = true;
      continue;
    }
    if (after) {
      out.add(g);
      continue;
    }
    const int p0 = orbital_of[g.qubits[0]];
    if (g.kind == GateKind::X && g.role == GateRole::Reference && p0 >= 0) {
      out.add(Gate::x(up(p0)));
      out.add(Gate::x(dn(p0)));
    } else if (g.kind == GateKind::Excitation && g.excitation == ExcitationType::Hcb && p0 >= 0 &&
               orbital_of[g.qubits[1]] >= 0) {
      const int p1 = orbital_of[g.qubits[1]];
      out.add(Gate::excite(ExcitationType::Fermionic, {up(p0), dn(p0)}, {up(p1), dn(p1)}, g.param));
    } else {
      throw std::invalid_argument("cannot lower " + kind_name(g) + " before the bridge");
    }
  }
  return out;
}

Circuit compile(const Circuit& circuit, int level) {
  if (level < 0 || level > 2) throw std::invalid_argument("optimization level must be 0, 1 or 2");
  Circuit out(circuit.n_qubits(), circuit.register_kind(), circuit.layout());
  if (level == 2) {
    const bool bridged = circuit.has_bridge();
    std::vector<Gate> region;
    std::size_t i = 0;
    const auto& gates = circuit.gates();
    if (bridged || circuit.register_kind() == Register::Hcb) {
      for (; i < gates.size() && gates[i].role != GateRole::Bridge; ++i) region.push_back(gates[i]);
    } else {
      throw std::invalid_argument("level 2 needs an SPA circuit (no HCB pair region found)");
    }
    compile_spa_region(out, region);
    for (; i < gates.size(); ++i) {
      const Gate& g = gates[i];
      if (g.role == GateRole::Bridge) {
        out.add(g);
        continue;
      }
      append_level(out, g, 1);
    }
    return out;
  }
  const Circuit lowered = lower_to_jw(circuit);
  for (const auto& g : lowered.gates()) append_level(out, g, level);
  return out;
}

}  // namespace pairq
