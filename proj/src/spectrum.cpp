// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/spectrum.hpp"

#include <bit>
#include <stdexcept>

namespace pairq {

namespace {

cplx i_pow(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

Statevector SpectrumResult::state(std::size_t k) const {
  if (eigenvectors.cols() == 0) throw std::logic_error("spectrum was computed without vectors");
  Statevector s(n_qubits, 40);
  auto& a = s.amplitudes();
  a[0] = 0.0;
  for (std::size_t i = 0; i < sector.size(); ++i) a[sector[i]] = eigenvectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
  return s;
}

std::vector<double> SpectrumResult::fidelities(const Statevector& psi) const {
  if (eigenvectors.cols() == 0) throw std::logic_error("spectrum was computed without vectors");
  if (psi.n_qubits() != n_qubits) throw std::invalid_argument("state size differs from spectrum");
  Eigen::VectorXcd v(sector.size());
  for (std::size_t i = 0; i < sector.size(); ++i) v(static_cast<Eigen::Index>(i)) = psi[sector[i]];
  const Eigen::VectorXcd o = eigenvectors.adjoint() * v;
  std::vector<double> f(static_cast<std::size_t>(o.size()));
  for (Eigen::Index k = 0; k < o.size(); ++k) f[static_cast<std::size_t>(k)] = std::norm(o(k));
  return f;
}

SpectrumResult exact_spectrum(const PauliSum& h, std::optional<int> n_particles, bool vectors,
                              int n_qubits, int max_qubits) {
  const int n = std::max(n_qubits, h.n_qubits());
  if (n > max_qubits)
    throw std::invalid_argument("exact diagonalization of " + std::to_string(n) +
                                " qubits exceeds the cap of " + std::to_string(max_qubits));
  if (n_particles && (*n_particles < 0 || *n_particles > n))
    throw std::invalid_argument("particle number outside 0..n_qubits");
  SpectrumResult r;
  r.n_qubits = n;
  r.n_particles = n_particles;
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<std::int64_t> rank(full, -1);
  for (std::uint64_t b = 0; b < full; ++b)
    if (!n_particles || std::popcount(b) == *n_particles) {
      rank[b] = static_cast<std::int64_t>(r.sector.size());
      r.sector.push_back(b);
    }
  const auto d = static_cast<Eigen::Index>(r.sector.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& t : h.terms()) {
    const std::uint64_t x = t.word.x_bits(), z = t.word.z_bits();
    const cplx base = t.coeff * i_pow(t.word.y_count());
    for (Eigen::Index i = 0; i < d; ++i) {
      const std::uint64_t b = r.sector[static_cast<std::size_t>(i)];
      const std::int64_t j = rank[b ^ x];
      if (j < 0) continue;
      m(j, i) += (std::popcount(b & z) & 1) ? -base : base;
    }
  }
  if (m.imag().cwiseAbs().maxCoeff() < 1e-14) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        m.real(), vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    r.eigenvalues = es.eigenvalues();
    if (vectors) r.eigenvectors = es.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    r.eigenvalues = es.eigenvalues();
    if (vectors) r.eigenvectors = es.eigenvectors();
  }
  return r;
}

}  // namespace pairq
