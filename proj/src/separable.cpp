// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/separable.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pairq {

namespace {

using u64 = std::uint64_t;
using Mask = std::array<u64, 2>;
using Sparse = std::map<u64, cplx>;

constexpr double kPrune = 1e-15;

void set_bit(Mask& m, int q) { m[q / 64] |= u64{1} << (q % 64); }
int popcount(const Mask& m) { return std::popcount(m[0]) + std::popcount(m[1]); }
Mask operator&(const Mask& a, const Mask& b) { return {a[0] & b[0], a[1] & b[1]}; }
Mask operator^(const Mask& a, const Mask& b) { return {a[0] ^ b[0], a[1] ^ b[1]}; }
bool any(const Mask& m) { return m[0] || m[1]; }

cplx i_pow(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// One pair block: its qubits (ascending) and a sparse state over them.
struct Block {
  std::vector<int> qubits;
  std::vector<int> orbitals;  // reference first, then by first appearance
  Sparse state{{0, 1.0}};

  int local(int q) const {
    auto it = std::lower_bound(qubits.begin(), qubits.end(), q);
    if (it == qubits.end() || *it != q) return -1;
    return static_cast<int>(it - qubits.begin());
  }
};

void prune_into(Sparse& out, u64 b, cplx v) {
  auto& slot = out[b];
  slot += v;
}

Sparse finish(Sparse&& s) {
  for (auto it = s.begin(); it != s.end();)
    it = std::abs(it->second) < kPrune ? s.erase(it) : std::next(it);
  return std::move(s);
}

// 2x2 unitary [[a, b], [c, d]] on local bit q (optionally controlled on bit cq).
void apply_local_1q(Block& blk, int q, int cq, cplx a, cplx b, cplx c, cplx d) {
  const u64 m = u64{1} << q;
  const u64 cm = cq >= 0 ? u64{1} << cq : 0;
  Sparse out;
  for (const auto& [bits, v] : blk.state) {
    if (cm && !(bits & cm)) {
      prune_into(out, bits, v);
      continue;
    }
    if (bits & m) {
      prune_into(out, bits & ~m, b * v);
      prune_into(out, bits, d * v);
    } else {
      prune_into(out, bits, a * v);
      prune_into(out, bits | m, c * v);
    }
  }
  blk.state = finish(std::move(out));
}

void apply_local_pauli_exp(Block& blk, u64 x, u64 z, int ny, double phi) {
  const cplx iy = i_pow(ny);
  const double c = std::cos(phi), s = std::sin(phi);
  Sparse out;
  for (const auto& [bits, v] : blk.state) {
    prune_into(out, bits, c * v);
    const cplx ph = (std::popcount(bits & z) & 1) ? -iy : iy;
    prune_into(out, bits ^ x, cplx(0, -s) * ph * v);
  }
  blk.state = finish(std::move(out));
}

int local_fermion_sign(const std::vector<int>& cre, const std::vector<int>& ann, u64 b) {
  int s = 0;
  u64 cur = b;
  for (std::size_t k = cre.size(); k-- > 0;) {
    s ^= std::popcount(cur & ((u64{1} << ann[k]) - 1)) & 1;
    cur ^= u64{1} << ann[k];
    s ^= std::popcount(cur & ((u64{1} << cre[k]) - 1)) & 1;
    cur ^= u64{1} << cre[k];
  }
  return s ? -1 : 1;
}

void apply_in_block(Block& blk, const Gate& g, double angle) {
  std::vector<int> lq;
  for (int q : g.qubits) lq.push_back(blk.local(q));
  switch (g.kind) {
    case GateKind::X: apply_local_1q(blk, lq[0], -1, 0, 1, 1, 0); return;
    case GateKind::H: {
      const double r = 1 / std::sqrt(2.0);
      apply_local_1q(blk, lq[0], -1, r, r, r, -r);
      return;
    }
    case GateKind::Ry:
    case GateKind::CRy: {
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      if (g.kind == GateKind::Ry) apply_local_1q(blk, lq[0], -1, c, -s, s, c);
      else apply_local_1q(blk, lq[1], lq[0], c, -s, s, c);
      return;
    }
    case GateKind::Rz:
      apply_local_1q(blk, lq[0], -1, std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2));
      return;
    case GateKind::CNOT: apply_local_1q(blk, lq[1], lq[0], 0, 1, 1, 0); return;
    case GateKind::PauliRotation:
      for (const auto& t : g.generator.terms()) {
        u64 x = 0, z = 0;
        for (const auto& [q, a] : t.word.factors()) {
          const int l = blk.local(q);
          if (a != Axis::Z) x |= u64{1} << l;
          if (a != Axis::X) z |= u64{1} << l;
        }
        apply_local_pauli_exp(blk, x, z, t.word.y_count(), 0.5 * angle * t.coeff.real());
      }
      return;
    case GateKind::Excitation: {
      const std::size_t m = lq.size() / 2;
      const std::vector<int> cre(lq.begin(), lq.begin() + static_cast<std::ptrdiff_t>(m));
      const std::vector<int> ann(lq.begin() + static_cast<std::ptrdiff_t>(m), lq.end());
      u64 cm = 0, am = 0;
      for (int q : cre) cm |= u64{1} << q;
      for (int q : ann) am |= u64{1} << q;
      const bool fermionic = g.excitation == ExcitationType::Fermionic;
      const double c = std::cos(angle / 2), s = std::sin(angle / 2);
      Sparse out;
      for (const auto& [bits, v] : blk.state) {
        if ((bits & am) == am && !(bits & cm)) {
          const double sg = fermionic ? local_fermion_sign(cre, ann, bits) : 1.0;
          prune_into(out, bits, c * v);
          prune_into(out, bits ^ am ^ cm, sg * s * v);
        } else if ((bits & cm) == cm && !(bits & am)) {
          const u64 partner = bits ^ am ^ cm;
          const double sg = fermionic ? local_fermion_sign(cre, ann, partner) : 1.0;
          prune_into(out, bits, c * v);
          prune_into(out, partner, -sg * s * v);
        } else {
          prune_into(out, bits, v);
        }
      }
      blk.state = finish(std::move(out));
      return;
    }
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::size_t PairWavefunction::stored_amplitudes() const {
  std::size_t n = 0;
  for (const auto& a : amplitudes) n += a.size();
  return n;
}

std::vector<int> PairWavefunction::occupied_qubits(int orbital) const {
  if (reg == Register::JordanWigner)
    return {spin_orbital(orbital, Spin::Up, n_orbitals, layout),
            spin_orbital(orbital, Spin::Down, n_orbitals, layout)};
  return {orbital};
}

Statevector PairWavefunction::embed(int max_qubits) const {
  Statevector out(n_qubits(), max_qubits);
  auto& psi = out.amplitudes();
  psi[0] = 0.0;
  std::vector<std::size_t> idx(amplitudes.size(), 0);
  while (true) {
    cplx a = 1.0;
    u64 mask = 0;
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
      a *= amplitudes[k][idx[k]];
      for (int q : occupied_qubits(pair_sets[k][idx[k]])) mask |= u64{1} << q;
    }
    psi[mask] += a;
    std::size_t k = 0;
    for (; k < idx.size(); ++k) {
      if (++idx[k] < amplitudes[k].size()) break;
      idx[k] = 0;
    }
    if (k == idx.size()) break;
  }
  return out;
}

PairWavefunction simulate_separable(const Circuit& c, const ParamMap& params,
                                    const std::optional<PairSets>& pairs) {
  if (c.register_kind() == Register::Qubit)
    throw std::invalid_argument("separable simulation needs an HCB or JW register");
  const int n = c.n_orbitals();
  const bool jw = c.register_kind() == Register::JordanWigner;
  std::vector<int> orbital_of(c.n_qubits());
  for (int p = 0; p < n; ++p) {
    if (jw) {
      orbital_of[spin_orbital(p, Spin::Up, n, c.layout())] = p;
      orbital_of[spin_orbital(p, Spin::Down, n, c.layout())] = p;
    } else {
      orbital_of[p] = p;
    }
  }
  auto qubits_of = [&](int p) {
    if (!jw) return std::vector<int>{p};
    return std::vector<int>{spin_orbital(p, Spin::Up, n, c.layout()),
                            spin_orbital(p, Spin::Down, n, c.layout())};
  };

  // Orbital groups.
  std::vector<std::vector<int>> groups;
  std::vector<int> ref_of_group;
  if (pairs) {
    groups = *pairs;
  } else {
    UnionFind uf(n);
    for (const auto& g : c.gates())
      for (std::size_t i = 1; i < g.qubits.size(); ++i)
        uf.join(orbital_of[g.qubits[0]], orbital_of[g.qubits[i]]);
    std::map<int, std::vector<int>> comp;
    std::vector<bool> seen(n, false);
    std::vector<int> first_x(n, -1);
    for (const auto& g : c.gates()) {
      for (int q : g.qubits) {
        const int p = orbital_of[q];
        const int root = uf.find(p);
        if (g.kind == GateKind::X && first_x[root] < 0) first_x[root] = p;
        if (!seen[p]) {
          seen[p] = true;
          comp[root].push_back(p);
        }
      }
    }
    for (auto& [root, orbs] : comp) {
      const int ref = first_x[root];
      if (ref < 0) {
        groups.push_back(orbs);
        ref_of_group.push_back(-1);
        continue;
      }
      std::vector<int> ordered{ref};
      for (int p : orbs)
        if (p != ref) ordered.push_back(p);
      groups.push_back(ordered);
      ref_of_group.push_back(ref);
    }
  }

  std::vector<int> block_of(c.n_qubits(), -1);
  std::vector<Block> blocks(groups.size());
  for (std::size_t k = 0; k < groups.size(); ++k) {
    for (int p : groups[k]) {
      if (p < 0 || p >= n) throw std::invalid_argument("pair set orbital outside register");
      for (int q : qubits_of(p)) {
        if (block_of[q] >= 0) throw std::invalid_argument("pair sets overlap");
        block_of[q] = static_cast<int>(k);
        blocks[k].qubits.push_back(q);
      }
    }
    std::sort(blocks[k].qubits.begin(), blocks[k].qubits.end());
    if (blocks[k].qubits.size() > 64)
      throw std::invalid_argument("pair block wider than 64 qubits");
    blocks[k].orbitals = groups[k];
  }

  for (const auto& g : c.gates()) {
    const int k = block_of[g.qubits[0]];
    for (int q : g.qubits)
      if (k < 0 || block_of[q] != k)
        throw std::invalid_argument("non-separable circuit: " + kind_name(g) +
                                    " couples different pair blocks");
    if (g.kind == GateKind::Excitation && g.excitation == ExcitationType::Fermionic) {
      const PauliSum gen = g.generator_sum();
      for (const auto& t : gen.terms())
        for (const auto& [q, a] : t.word.factors())
          if (q >= c.n_qubits() || block_of[q] != k)
            throw std::invalid_argument("non-separable circuit: excitation carries a Z string "
                                        "outside its pair block");
    }
    apply_in_block(blocks[k], g, g.parametrized() ? g.param.value(params) : 0.0);
  }

  PairWavefunction w;
  w.n_orbitals = n;
  w.reg = c.register_kind();
  w.layout = c.layout();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Block& blk = blocks[k];
    const bool vacuum_group = !pairs && ref_of_group[k] < 0;
    std::map<u64, int> slot;
    for (std::size_t l = 0; l < blk.orbitals.size(); ++l) {
      u64 m = 0;
      for (int q : qubits_of(blk.orbitals[l])) m |= u64{1} << blk.local(q);
      slot[m] = static_cast<int>(l);
    }
    std::vector<cplx> amp(blk.orbitals.size(), 0.0);
    for (const auto& [bits, v] : blk.state) {
      if (std::abs(v) < 1e-10) continue;
      if (vacuum_group) {
        if (bits != 0) throw std::invalid_argument("non-separable circuit: a block without "
                                                   "a reference ends up occupied");
        continue;
      }
      auto it = slot.find(bits);
      if (it == slot.end())
        throw std::invalid_argument("non-separable circuit: pair block leaves the one-pair "
                                    "seniority-zero space");
      amp[it->second] = v;
    }
    if (vacuum_group) continue;
    w.pair_sets.push_back(blk.orbitals);
    w.amplitudes.push_back(std::move(amp));
  }
  return w;
}

double expectation(const PairWavefunction& w, const PauliSum& h) {
  if (h.n_qubits() > w.n_qubits())
    throw std::invalid_argument("Hamiltonian acts on " + std::to_string(h.n_qubits()) +
                                " qubits, pair state has " + std::to_string(w.n_qubits()));
  const std::size_t K = w.pair_sets.size();
  std::vector<Mask> block_mask(K, Mask{});
  std::vector<std::vector<Mask>> occ(K);
  Mask covered{};
  for (std::size_t k = 0; k < K; ++k) {
    for (int p : w.pair_sets[k]) {
      Mask m{};
      for (int q : w.occupied_qubits(p)) {
        set_bit(m, q);
        set_bit(block_mask[k], q);
        set_bit(covered, q);
      }
      occ[k].push_back(m);
    }
  }
  cplx total = 0.0;
  for (const auto& t : h.terms()) {
    const Mask x{t.word.x_bits(0), t.word.x_bits(1)};
    const Mask z{t.word.z_bits(0), t.word.z_bits(1)};
    const Mask outside_x{x[0] & ~covered[0], x[1] & ~covered[1]};
    if (any(outside_x)) continue;  // flips an empty orbital outside every pair
    cplx prod = t.coeff;
    for (std::size_t k = 0; k < K && prod != cplx(0); ++k) {
      const Mask xk = x & block_mask[k];
      const Mask zk = z & block_mask[k];
      const int ny = popcount(xk & zk);
      const auto& a = w.amplitudes[k];
      cplx f = 0.0;
      for (std::size_t l2 = 0; l2 < a.size(); ++l2) {
        if (a[l2] == cplx(0)) continue;
        const Mask target = occ[k][l2] ^ xk;
        std::size_t l = a.size();
        if (!any(xk)) l = l2;
        else
          for (std::size_t j = 0; j < a.size(); ++j)
            if (occ[k][j] == target) {
              l = j;
              break;
            }
        if (l == a.size()) continue;
        const cplx ph = (popcount(zk & occ[k][l2]) & 1) ? -i_pow(ny) : i_pow(ny);
        f += std::conj(a[l]) * ph * a[l2];
      }
      prod *= f;
    }
    total += prod;
  }
  return total.real();
}

double variance(const PairWavefunction& w, const PauliSum& h) {
  const PauliSum centered = h - PauliSum::constant(h.coefficient(PauliWord{}));
  const double e = expectation(w, centered);
  return std::abs(expectation(w, squared(centered)) - e * e);
}

}  // namespace pairq
