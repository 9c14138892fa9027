// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "pairq/errors.hpp"

namespace pairq {

namespace {

using u64 = std::uint64_t;

inline u64 bit(int q) { return u64{1} << q; }
inline int parity(u64 v) { return std::popcount(v) & 1; }

cplx i_pow(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

void check_word_fits(const PauliWord& w, std::size_t dim) {
  const int top = w.max_qubit();
  if (top >= 0 && (top >= 63 || (u64{1} << top) >= dim))
    throw std::invalid_argument("Pauli term acts outside the state register");
}

// psi[b] and psi[b ^ x] mixed by cos(phi) - i sin(phi) P.
void pauli_exp(std::vector<cplx>& psi, const PauliString& term, double phi) {
  check_word_fits(term.word, psi.size());
  const u64 x = term.word.x_bits(), z = term.word.z_bits();
  const cplx iy = i_pow(term.word.y_count());
  const double c = std::cos(phi), s = std::sin(phi);
  const cplx mis(0, -s);
  const std::size_t dim = psi.size();
  if (x == 0) {
    const cplx plus = c + mis * iy, minus = c - mis * iy;
    for (std::size_t b = 0; b < dim; ++b) psi[b] *= parity(b & z) ? minus : plus;
    return;
  }
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t b2 = b ^ x;
    if (b2 < b) continue;
    const cplx ph1 = parity(b & z) ? -iy : iy;    // P|b>  = ph1 |b2>
    const cplx ph2 = parity(b2 & z) ? -iy : iy;   // P|b2> = ph2 |b>
    const cplx v1 = psi[b], v2 = psi[b2];
    psi[b] = c * v1 + mis * ph2 * v2;
    psi[b2] = c * v2 + mis * ph1 * v1;
  }
}

void pauli_apply_add(const std::vector<cplx>& psi, std::vector<cplx>& out, const PauliString& term) {
  check_word_fits(term.word, psi.size());
  const u64 x = term.word.x_bits(), z = term.word.z_bits();
  const cplx base = term.coeff * i_pow(term.word.y_count());
  for (std::size_t b = 0; b < psi.size(); ++b) {
    if (psi[b] == cplx(0)) continue;
    out[b ^ x] += (parity(b & z) ? -base : base) * psi[b];
  }
}

struct ExcitationMasks {
  u64 cre = 0, ann = 0;
};

ExcitationMasks masks(const Gate& g, std::size_t dim) {
  ExcitationMasks m;
  for (int q : g.creators()) m.cre |= bit(q);
  for (int q : g.annihilators()) m.ann |= bit(q);
  if (((m.cre | m.ann) >> 1) >= dim) throw std::invalid_argument("excitation outside register");
  return m;
}

// Sign of A|b> with A = prod_k a+_{c_k} a_{a_k}; b has annihilators filled.
int fermion_sign(const Gate& g, u64 b) {
  const std::size_t m = g.qubits.size() / 2;
  int s = 0;
  u64 cur = b;
  for (std::size_t k = m; k-- > 0;) {
    const int a = g.qubits[m + k], c = g.qubits[k];
    s ^= parity(cur & (bit(a) - 1));
    cur ^= bit(a);
    s ^= parity(cur & (bit(c) - 1));
    cur ^= bit(c);
  }
  return s ? -1 : 1;
}

void excitation(std::vector<cplx>& psi, const Gate& g, double angle) {
  const auto m = masks(g, psi.size());
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const bool fermionic = g.excitation == ExcitationType::Fermionic;
  const u64 flip = m.cre | m.ann;
  for (std::size_t b = 0; b < psi.size(); ++b) {
    if ((b & m.ann) != m.ann || (b & m.cre) != 0) continue;
    const std::size_t b2 = b ^ flip;
    const double sg = fermionic ? fermion_sign(g, b) : 1.0;
    const cplx v1 = psi[b], v2 = psi[b2];
    psi[b] = c * v1 - sg * s * v2;
    psi[b2] = sg * s * v1 + c * v2;
  }
}

void excitation_generator_apply(std::vector<cplx>& psi, const Gate& g) {
  const auto m = masks(g, psi.size());
  const bool fermionic = g.excitation == ExcitationType::Fermionic;
  const u64 flip = m.cre | m.ann;
  std::vector<cplx> out(psi.size(), 0.0);
  for (std::size_t b = 0; b < psi.size(); ++b) {
    if ((b & m.ann) != m.ann || (b & m.cre) != 0) continue;
    const std::size_t b2 = b ^ flip;
    const double sg = fermionic ? fermion_sign(g, b) : 1.0;
    out[b2] += cplx(0, sg) * psi[b];
    out[b] += cplx(0, -sg) * psi[b2];
  }
  psi.swap(out);
}

template <class F>
void for_pairs(std::size_t dim, int q, F&& f) {
  const u64 m = bit(q);
  for (std::size_t b = 0; b < dim; ++b)
    if (!(b & m)) f(b, b | m);
}

}  // namespace

Statevector::Statevector(int n_qubits, int max_qubits) : n_(n_qubits) {
  if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
  if (n_qubits > max_qubits || n_qubits > 40)
    throw std::invalid_argument("statevector of " + std::to_string(n_qubits) +
                                " qubits exceeds the cap of " + std::to_string(max_qubits));
  amp_.assign(std::size_t{1} << n_qubits, 0.0);
  amp_[0] = 1.0;
}

Statevector Statevector::basis(int n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dim()) throw std::out_of_range("basis index outside register");
  s.amp_[0] = 0.0;
  s.amp_[index] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(std::vector<cplx> amplitudes) {
  const std::size_t d = amplitudes.size();
  if (d == 0 || (d & (d - 1)) != 0) throw std::invalid_argument("amplitude count is not a power of two");
  Statevector s;
  s.n_ = std::countr_zero(d);
  s.amp_ = std::move(amplitudes);
  return s;
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::write_binary(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  auto put = [&](const void* p, std::size_t n) {
    // little-endian hosts only
    out.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
  };
  static_assert(std::endian::native == std::endian::little);
  const std::uint32_t n = static_cast<std::uint32_t>(n_);
  put(&n, sizeof n);
  for (const auto& a : amp_) {
    const double re = a.real(), im = a.imag();
    put(&re, 8);
    put(&im, 8);
  }
}

Statevector Statevector::read_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::uint32_t n = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  if (!in || n > 40) throw InputError("bad statevector header in '" + path + "'");
  std::vector<cplx> a(std::size_t{1} << n);
  for (auto& v : a) {
    double re = 0, im = 0;
    in.read(reinterpret_cast<char*>(&re), 8);
    in.read(reinterpret_cast<char*>(&im), 8);
    v = {re, im};
  }
  if (!in) throw InputError("truncated statevector file '" + path + "'");
  return from_amplitudes(std::move(a));
}

void apply_gate(std::vector<cplx>& psi, const Gate& g, double angle) {
  const std::size_t dim = psi.size();
  for (int q : g.qubits)
    if (q >= 63 || (u64{1} << q) >= dim) throw std::invalid_argument("gate outside register");
  switch (g.kind) {
    case GateKind::X:
      for_pairs(dim, g.qubits[0], [&](std::size_t a, std::size_t b) { std::swap(psi[a], psi[b]); });
      return;
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      for_pairs(dim, g.qubits[0], [&](std::size_t a, std::size_t b) {
        const cplx u = psi[a], v = psi[b];
        psi[a] = r * (u + v);
        psi[b] = r * (u - v);
      });
      return;
    }
    case GateKind::Ry: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      for_pairs(dim, g.qubits[0], [&](std::size_t a, std::size_t b) {
        const cplx u = psi[a], v = psi[b];
        psi[a] = c * u - s * v;
        psi[b] = s * u + c * v;
      });
      return;
    }
    case GateKind::Rz: {
      const cplx e0 = std::polar(1.0, -angle / 2), e1 = std::polar(1.0, angle / 2);
      for_pairs(dim, g.qubits[0], [&](std::size_t a, std::size_t b) {
        psi[a] *= e0;
        psi[b] *= e1;
      });
      return;
    }
    case GateKind::CNOT: {
      const u64 cm = bit(g.qubits[0]);
      for_pairs(dim, g.qubits[1], [&](std::size_t a, std::size_t b) {
        if (a & cm) std::swap(psi[a], psi[b]);
      });
      return;
    }
    case GateKind::CRy: {
      const u64 cm = bit(g.qubits[0]);
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      for_pairs(dim, g.qubits[1], [&](std::size_t a, std::size_t b) {
        if (!(a & cm)) return;
        const cplx u = psi[a], v = psi[b];
        psi[a] = c * u - s * v;
        psi[b] = s * u + c * v;
      });
      return;
    }
    case GateKind::PauliRotation:
      for (const auto& t : g.generator.terms()) pauli_exp(psi, t, 0.5 * angle * t.coeff.real());
      return;
    case GateKind::Excitation: excitation(psi, g, angle); return;
  }
}

void apply_gate_inverse(std::vector<cplx>& psi, const Gate& g, double angle) {
  if (g.kind == GateKind::PauliRotation) {
    // terms commute, order is irrelevant
    apply_gate(psi, g, -angle);
    return;
  }
  apply_gate(psi, g, g.parametrized() ? -angle : angle);
}

void apply_gate_generator(std::vector<cplx>& psi, const Gate& g) {
  const std::size_t dim = psi.size();
  switch (g.kind) {
    case GateKind::Ry:
      for_pairs(dim, g.qubits[0], [&](std::size_t a, std::size_t b) {
        const cplx u = psi[a], v = psi[b];
        psi[a] = cplx(0, -1) * v;
        psi[b] = cplx(0, 1) * u;
      });
      return;
    case GateKind::Rz:
      for_pairs(dim, g.qubits[0], [&](std::size_t, std::size_t b) { psi[b] = -psi[b]; });
      return;
    case GateKind::CRy: {
      const u64 cm = bit(g.qubits[0]);
      for_pairs(dim, g.qubits[1], [&](std::size_t a, std::size_t b) {
        if (!(a & cm)) {
          psi[a] = 0.0;
          psi[b] = 0.0;
          return;
        }
        const cplx u = psi[a], v = psi[b];
        psi[a] = cplx(0, -1) * v;
        psi[b] = cplx(0, 1) * u;
      });
      return;
    }
    case GateKind::PauliRotation: {
      std::vector<cplx> out(dim, 0.0);
      for (const auto& t : g.generator.terms()) pauli_apply_add(psi, out, t);
      psi.swap(out);
      return;
    }
    case GateKind::Excitation: excitation_generator_apply(psi, g); return;
    default: throw std::invalid_argument("gate " + kind_name(g) + " has no parameter");
  }
}

Statevector simulate_from(const Circuit& c, const ParamMap& params, Statevector input) {
  if (input.n_qubits() != c.n_qubits()) throw std::invalid_argument("input state has wrong size");
  auto& psi = input.amplitudes();
  for (const auto& g : c.gates()) apply_gate(psi, g, g.parametrized() ? g.param.value(params) : 0.0);
  return input;
}

Statevector simulate(const Circuit& c, const ParamMap& params, int max_qubits) {
  return simulate_from(c, params, Statevector(c.n_qubits(), max_qubits));
}

Statevector simulate(const Circuit& c, const std::vector<double>& values, int max_qubits) {
  return simulate(c, c.assign(values), max_qubits);
}

// ---------------------------------------------------------------------------

Observable::Observable(const PauliSum& h) : sum_(h), n_qubits_(h.n_qubits()) {
  std::unordered_map<u64, std::size_t> index;
  for (const auto& t : h.terms()) {
    if (t.word.max_qubit() >= 63) throw std::invalid_argument("observable too wide for a statevector");
    const u64 x = t.word.x_bits();
    auto [it, fresh] = index.emplace(x, groups_.size());
    if (fresh) groups_.push_back({x, {}});
    groups_[it->second].terms.push_back({t.word.z_bits(), t.coeff * i_pow(t.word.y_count())});
  }
}

double Observable::expectation(const std::vector<cplx>& psi) const {
  if (n_qubits_ > 0 && (u64{1} << n_qubits_) > psi.size())
    throw std::invalid_argument("observable acts on more qubits than the state has");
  cplx total = 0.0;
  const std::size_t dim = psi.size();
  for (const auto& grp : groups_) {
    cplx acc = 0.0;
    if (grp.terms.size() == 1) {
      const auto& t = grp.terms.front();
      for (std::size_t b = 0; b < dim; ++b) {
        const cplx v = std::conj(psi[b ^ grp.x]) * psi[b];
        acc += parity(b & t.z) ? -v : v;
      }
      total += t.c * acc;
      continue;
    }
    for (std::size_t b = 0; b < dim; ++b) {
      if (psi[b] == cplx(0)) continue;
      cplx d = 0.0;
      for (const auto& t : grp.terms) d += parity(b & t.z) ? -t.c : t.c;
      acc += std::conj(psi[b ^ grp.x]) * d * psi[b];
    }
    total += acc;
  }
  return total.real();
}

std::vector<cplx> Observable::apply(const std::vector<cplx>& psi) const {
  if (n_qubits_ > 0 && (u64{1} << n_qubits_) > psi.size())
    throw std::invalid_argument("observable acts on more qubits than the state has");
  std::vector<cplx> out(psi.size(), 0.0);
  for (const auto& grp : groups_)
    for (std::size_t b = 0; b < psi.size(); ++b) {
      if (psi[b] == cplx(0)) continue;
      cplx d = 0.0;
      for (const auto& t : grp.terms) d += parity(b & t.z) ? -t.c : t.c;
      out[b ^ grp.x] += d * psi[b];
    }
  return out;
}

double expectation(const Statevector& s, const PauliSum& h) { return expectation(s, Observable(h)); }

double expectation(const Statevector& s, const Observable& h) {
  if (h.n_qubits() > s.n_qubits())
    throw std::invalid_argument("Hamiltonian acts on " + std::to_string(h.n_qubits()) +
                                " qubits, state has " + std::to_string(s.n_qubits()));
  return h.expectation(s.amplitudes());
}

Statevector apply_operator(const PauliSum& h, const Statevector& s) {
  if (h.n_qubits() > s.n_qubits()) throw std::invalid_argument("operator wider than state");
  return Statevector::from_amplitudes(Observable(h).apply(s.amplitudes()));
}

PauliSum squared(const PauliSum& h) {
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, std::pair<PauliSum, PauliSum>> cache;
  const auto key = h.fingerprint();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second.first.distance(h) == 0.0) return it->second.second;
  }
  PauliSum h2 = h * h;
  std::lock_guard<std::mutex> lock(mu);
  cache.insert_or_assign(key, std::make_pair(h, h2));
  return h2;
}

double variance(const Statevector& s, const PauliSum& h) {
  // The variance is shift invariant; dropping the identity term avoids
  // cancellation against the large constant energy.
  const PauliSum centered = h - PauliSum::constant(h.coefficient(PauliWord{}));
  const double e = expectation(s, centered);
  const double e2 = expectation(s, squared(centered));
  return std::abs(e2 - e * e);
}

double fidelity(const Statevector& a, const Statevector& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("fidelity of states of different size");
  cplx o = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) o += std::conj(a[i]) * b[i];
  return std::min(1.0, std::norm(o));
}

}  // namespace pairq
