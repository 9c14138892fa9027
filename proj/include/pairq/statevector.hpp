// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pairq/circuit.hpp"
#include "pairq/pauli.hpp"

namespace pairq {

// Little-endian: qubit q is bit q of the basis index.
class Statevector {
 public:
  static constexpr int kDefaultMaxQubits = 28;

  explicit Statevector(int n_qubits = 0, int max_qubits = kDefaultMaxQubits);
  static Statevector basis(int n_qubits, std::uint64_t index);
  static Statevector from_amplitudes(std::vector<cplx> amplitudes);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes() { return amp_; }
  cplx operator[](std::size_t i) const { return amp_[i]; }
  double norm() const;

  // Raw dump: n_qubits as uint32 then 2^n (re, im) float64 pairs, little-endian.
  void write_binary(const std::string& path) const;
  static Statevector read_binary(const std::string& path);

 private:
  int n_ = 0;
  std::vector<cplx> amp_;
};

// Gate kernels on a raw amplitude vector.
void apply_gate(std::vector<cplx>& psi, const Gate& g, double angle);
// Applies the inverse (angle -> -angle, self-inverse gates unchanged).
void apply_gate_inverse(std::vector<cplx>& psi, const Gate& g, double angle);
// psi <- G psi for the rotation generator G of g (see Gate::generator_sum).
void apply_gate_generator(std::vector<cplx>& psi, const Gate& g);

Statevector simulate(const Circuit& c, const ParamMap& params,
                     int max_qubits = Statevector::kDefaultMaxQubits);
Statevector simulate(const Circuit& c, const std::vector<double>& values,
                     int max_qubits = Statevector::kDefaultMaxQubits);
// Runs c on the given input state instead of |0...0>.
Statevector simulate_from(const Circuit& c, const ParamMap& params, Statevector input);

// PauliSum prepared for repeated application: terms grouped by X mask.
class Observable {
 public:
  Observable() = default;
  explicit Observable(const PauliSum& h);

  int n_qubits() const { return n_qubits_; }
  const PauliSum& sum() const { return sum_; }
  double expectation(const std::vector<cplx>& psi) const;
  std::vector<cplx> apply(const std::vector<cplx>& psi) const;

 private:
  struct Term {
    std::uint64_t z;
    cplx c;
  };
  struct Group {
    std::uint64_t x;
    std::vector<Term> terms;
  };
  PauliSum sum_;
  int n_qubits_ = 0;
  std::vector<Group> groups_;
};

double expectation(const Statevector& s, const PauliSum& h);
double expectation(const Statevector& s, const Observable& h);
Statevector apply_operator(const PauliSum& h, const Statevector& s);
// H^2 is built once per distinct Hamiltonian and cached.
double variance(const Statevector& s, const PauliSum& h);
PauliSum squared(const PauliSum& h);
double fidelity(const Statevector& a, const Statevector& b);

}  // namespace pairq
