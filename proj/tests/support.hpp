// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

// Dense reference implementations used as oracles. They share no code with
// the library kernels: operators are assembled from 2x2 matrices by
// Kronecker products and exponentials come from an eigendecomposition.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "pairq/circuit.hpp"
#include "pairq/io.hpp"
#include "pairq/pauli.hpp"

namespace support {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using pairq::cplx;

inline std::string fixture(const std::string& rel) { return std::string(PAIRQ_FIXTURES) + "/" + rel; }

inline Mat pauli_1q(char a) {
  Mat m(2, 2);
  const cplx i(0, 1);
  switch (a) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Little-endian: qubit 0 is the rightmost Kronecker factor.
inline Mat embed(const std::vector<std::pair<int, Mat>>& ops, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    Mat f = Mat::Identity(2, 2);
    for (const auto& [k, m] : ops)
      if (k == q) f = m;
    out = kron(out, f);
  }
  return out;
}

inline Mat dense(const pairq::PauliSum& h, int n) {
  const auto dim = Eigen::Index{1} << n;
  Mat out = Mat::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    std::vector<std::pair<int, Mat>> ops;
    for (const auto& [q, a] : t.word.factors()) {
      const char c = a == pairq::Axis::X ? 'X' : a == pairq::Axis::Y ? 'Y' : 'Z';
      ops.emplace_back(q, pauli_1q(c));
    }
    out += t.coeff * embed(ops, n);
  }
  return out;
}

// exp(-i t H) for Hermitian H.
inline Mat expm_herm(const Mat& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Vec phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::polar(1.0, -t * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline Mat ry_matrix(double a) {
  Mat m(2, 2);
  m << std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2);
  return m;
}

inline Mat rz_matrix(double a) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -a / 2);
  m(1, 1) = std::polar(1.0, a / 2);
  return m;
}

// Controlled single-qubit u: |0><0| x 1 + |1><1| x u.
inline Mat controlled(int c, int t, const Mat& u, int n) {
  Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  return embed({{c, p0}}, n) + embed({{c, p1}, {t, u}}, n);
}

// Lifts a 2^k x 2^k matrix on `qubits` (local bit i <-> qubits[i]) to n qubits.
inline Eigen::SparseMatrix<cplx> lift(const Mat& local, const std::vector<int>& qubits, int n) {
  const auto dim = Eigen::Index{1} << n;
  std::vector<Eigen::Triplet<cplx>> trip;
  for (Eigen::Index b = 0; b < dim; ++b) {
    Eigen::Index in = 0, rest = b;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      in |= ((b >> qubits[i]) & 1) << i;
      rest &= ~(Eigen::Index{1} << qubits[i]);
    }
    for (Eigen::Index out = 0; out < local.rows(); ++out) {
      if (local(out, in) == cplx(0.0)) continue;
      Eigen::Index row = rest;
      for (std::size_t i = 0; i < qubits.size(); ++i) row |= ((out >> i) & 1) << qubits[i];
      trip.emplace_back(row, b, local(out, in));
    }
  }
  Eigen::SparseMatrix<cplx> m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

// Textbook matrix of a gate; PauliRotation and Excitation through the
// exponential of their generator.
inline Eigen::SparseMatrix<cplx> gate_matrix(const pairq::Gate& g, double angle, int n) {
  using pairq::GateKind;
  Mat h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::X: return lift(pauli_1q('X'), g.qubits, n);
    case GateKind::H: return lift(h, g.qubits, n);
    case GateKind::Ry: return lift(ry_matrix(angle), g.qubits, n);
    case GateKind::Rz: return lift(rz_matrix(angle), g.qubits, n);
    case GateKind::CNOT: return lift(controlled(0, 1, pauli_1q('X'), 2), g.qubits, n);
    case GateKind::CRy: return lift(controlled(0, 1, ry_matrix(angle), 2), g.qubits, n);
    default: return expm_herm(dense(g.generator_sum(), n), angle / 2).sparseView(1e-300, 1.0);
  }
}

inline Mat circuit_unitary(const pairq::Circuit& c, const pairq::ParamMap& p) {
  const int n = c.n_qubits();
  Mat u = Mat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (const auto& g : c.gates()) u = gate_matrix(g, g.parametrized() ? g.param.value(p) : 0.0, n) * u;
  return u;
}

inline Vec to_eigen(const std::vector<cplx>& v) { return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size())); }

inline Vec random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Vec v(Eigen::Index{1} << n);
  for (auto& x : v) x = cplx(d(rng), d(rng));
  return v / v.norm();
}

inline pairq::ParamMap random_params(const pairq::Circuit& c, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  pairq::ParamMap p;
  for (const auto& name : c.parameters()) p[name] = d(rng);
  return p;
}

// Distance between vectors up to a global phase.
inline double phase_distance(const Vec& a, const Vec& b) {
  const cplx ov = a.dot(b);
  const cplx ph = std::abs(ov) > 1e-14 ? ov / std::abs(ov) : cplx(1.0);
  return (a * ph - b).norm();
}

}  // namespace support
