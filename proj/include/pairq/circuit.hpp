// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pairq/fermion.hpp"
#include "pairq/pauli.hpp"

namespace pairq {

using ParamMap = std::map<std::string, double>;

// Angle = scale * value(name) + offset, or just offset when name is empty.
struct Param {
  std::string name;
  double scale = 1.0;
  double offset = 0.0;

  static Param fixed(double angle) { return {"", 0.0, angle}; }
  static Param symbol(std::string name, double scale = 1.0) { return {std::move(name), scale, 0.0}; }

  bool symbolic() const { return !name.empty(); }
  double value(const ParamMap& values) const;
  Param scaled(double s) const { return {name, scale * s, offset * s}; }
  Param negated() const { return scaled(-1.0); }
  std::string to_string() const;
  static Param parse(const std::string& token);
};

enum class GateKind { X, H, Ry, Rz, CNOT, CRy, PauliRotation, Excitation };

// Hcb: pair hopping on the one-qubit-per-orbital register (no Z strings).
// Fermionic: JW image of the ladder-operator excitation (Z strings kept).
// Qubit: sigma+/sigma- product without Z strings.
enum class ExcitationType { Hcb, Fermionic, Qubit };

// Marks the parts of a bridged circuit that compile() lowers into the JW register.
enum class GateRole { Body, Reference, Bridge };

struct Gate {
  GateKind kind = GateKind::X;
  // Excitation: creators followed by annihilators (equal halves).
  // CNOT/CRy: control, target.
  std::vector<int> qubits;
  Param param;
  ExcitationType excitation = ExcitationType::Fermionic;
  // PauliRotation only: exp(-i angle/2 * generator); terms must commute.
  PauliSum generator;
  GateRole role = GateRole::Body;

  static Gate x(int q, GateRole role = GateRole::Body) { return {GateKind::X, {q}, {}, {}, {}, role}; }
  static Gate h(int q) { return {GateKind::H, {q}, {}, {}, {}, {}}; }
  static Gate ry(int q, Param p) { return {GateKind::Ry, {q}, std::move(p), {}, {}, {}}; }
  static Gate rz(int q, Param p) { return {GateKind::Rz, {q}, std::move(p), {}, {}, {}}; }
  static Gate cnot(int c, int t, GateRole role = GateRole::Body) {
    return {GateKind::CNOT, {c, t}, {}, {}, {}, role};
  }
  static Gate cry(int c, int t, Param p) { return {GateKind::CRy, {c, t}, std::move(p), {}, {}, {}}; }
  static Gate pauli_rotation(PauliSum generator, Param p);
  static Gate excite(ExcitationType type, const std::vector<int>& creators,
                     const std::vector<int>& annihilators, Param p);

  bool parametrized() const;
  bool primitive() const { return kind != GateKind::PauliRotation && kind != GateKind::Excitation; }
  std::vector<int> creators() const;
  std::vector<int> annihilators() const;
  // Hermitian generator G with the gate equal to exp(-i angle/2 G) (up to phase
  // for the fixed gates X, H, CNOT).
  PauliSum generator_sum() const;
};

std::string kind_name(const Gate& g);

// What the qubits of a circuit stand for.
enum class Register { Qubit, Hcb, JordanWigner };

class Circuit {
 public:
  explicit Circuit(int n_qubits = 0, Register reg = Register::Qubit,
                   SpinLayout layout = SpinLayout::Interleaved);

  void add(Gate g);
  void append(const Circuit& other);

  const std::vector<Gate>& gates() const { return gates_; }
  int n_qubits() const { return n_qubits_; }
  Register register_kind() const { return register_; }
  SpinLayout layout() const { return layout_; }
  // Spatial orbitals covered: n_qubits for HCB registers, n_qubits/2 for JW.
  int n_orbitals() const;
  // Parameter names in order of first appearance.
  const std::vector<std::string>& parameters() const { return params_; }
  std::size_t n_params() const { return params_.size(); }
  bool has_parameter(const std::string& name) const;

  ParamMap assign(const std::vector<double>& values) const;
  std::vector<double> values(const ParamMap& m) const;
  bool has_bridge() const;

 private:
  int n_qubits_ = 0;
  Register register_ = Register::Qubit;
  SpinLayout layout_ = SpinLayout::Interleaved;
  std::vector<Gate> gates_;
  std::vector<std::string> params_;
};

struct ResourceReport {
  int n_params = 0;
  int n_cnot = 0;
  int depth = 0;
  int n_qubits = 0;
};

// Counts CNOT + 2 per CRy; depth by greedy layering with CRy taking 4 layers.
ResourceReport resources(const Circuit& c);

// Text format: header lines "QUBITS n", "REGISTER hcb|jw|qubit", "LAYOUT ...",
// then one gate per line "KIND qubits... [param]".
void write_circuit(std::ostream& out, const Circuit& c);
Circuit read_circuit(std::istream& in);

}  // namespace pairq
