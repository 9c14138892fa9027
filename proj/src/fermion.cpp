// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/fermion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pairq {

int spin_orbital(int p, Spin s, int n_orbitals, SpinLayout layout) {
  if (p < 0 || p >= n_orbitals) throw std::out_of_range("orbital index out of range");
  const int sp = static_cast<int>(s);
  return layout == SpinLayout::Interleaved ? 2 * p + sp : p + sp * n_orbitals;
}

std::string to_string(SpinLayout layout) {
  return layout == SpinLayout::Interleaved ? "interleaved" : "blocked";
}

SpinLayout parse_spin_layout(const std::string& s) {
  if (s == "interleaved") return SpinLayout::Interleaved;
  if (s == "blocked") return SpinLayout::Blocked;
  throw std::invalid_argument("unknown spin layout '" + s + "'");
}

int FermionOperator::max_index() const {
  int m = -1;
  for (const auto& p : products_)
    for (const auto& l : p.ops) m = std::max(m, l.index);
  return m;
}

FermionOperator FermionOperator::adjoint() const {
  std::vector<FermionProduct> out;
  out.reserve(products_.size());
  for (const auto& p : products_) {
    FermionProduct q{{p.ops.rbegin(), p.ops.rend()}, std::conj(p.coeff)};
    for (auto& l : q.ops) l.creation = !l.creation;
    out.push_back(std::move(q));
  }
  return FermionOperator(std::move(out));
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
  products_.insert(products_.end(), o.products_.begin(), o.products_.end());
  return *this;
}

FermionOperator operator*(cplx c, FermionOperator a) {
  for (auto& p : a.products_) p.coeff *= c;
  return a;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  std::vector<FermionProduct> out;
  out.reserve(a.products_.size() * b.products_.size());
  for (const auto& x : a.products_)
    for (const auto& y : b.products_) {
      FermionProduct p{x.ops, x.coeff * y.coeff};
      p.ops.insert(p.ops.end(), y.ops.begin(), y.ops.end());
      out.push_back(std::move(p));
    }
  return FermionOperator(std::move(out));
}

PauliSum jw_ladder(int j, bool creation) {
  PauliWord zs;
  for (int k = 0; k < j; ++k) zs.set(k, Axis::Z);
  PauliWord wx = zs, wy = zs;
  wx.set(j, Axis::X);
  wy.set(j, Axis::Y);
  const cplx ycoef = creation ? cplx(0, -0.5) : cplx(0, 0.5);
  return PauliSum({{wx, 0.5}, {wy, ycoef}});
}

PauliSum jordan_wigner(const FermionOperator& op, int n_spin_orbitals) {
  if (op.max_index() >= n_spin_orbitals)
    throw std::out_of_range("fermion index " + std::to_string(op.max_index()) +
                            " exceeds register of " + std::to_string(n_spin_orbitals));
  std::vector<PauliSum> up(n_spin_orbitals), down(n_spin_orbitals);
  for (int j = 0; j < n_spin_orbitals; ++j) {
    up[j] = jw_ladder(j, true);
    down[j] = jw_ladder(j, false);
  }
  std::vector<PauliString> all;
  for (const auto& p : op.products()) {
    if (std::any_of(p.ops.begin(), p.ops.end(), [](const Ladder& l) { return l.index < 0; }))
      throw std::out_of_range("negative fermion index");
    PauliSum acc = PauliSum::constant(p.coeff);
    for (const auto& l : p.ops) acc = acc * (l.creation ? up[l.index] : down[l.index]);
    all.insert(all.end(), acc.terms().begin(), acc.terms().end());
  }
  return PauliSum(all);
}

namespace {

void check_excitation(const std::vector<int>& creators, const std::vector<int>& annihilators) {
  if (creators.empty() || creators.size() != annihilators.size())
    throw std::invalid_argument("excitation needs equal, non-zero numbers of indices");
  std::set<int> seen;
  for (int i : creators) seen.insert(i);
  for (int i : annihilators)
    if (seen.count(i)) throw std::invalid_argument("creator and annihilator indices overlap");
  if (std::set<int>(creators.begin(), creators.end()).size() != creators.size() ||
      std::set<int>(annihilators.begin(), annihilators.end()).size() != annihilators.size())
    throw std::invalid_argument("repeated index in excitation");
}

}  // namespace

FermionOperator excitation_generator(const std::vector<int>& creators,
                                     const std::vector<int>& annihilators) {
  check_excitation(creators, annihilators);
  FermionProduct prod;
  for (std::size_t k = 0; k < creators.size(); ++k) {
    prod.ops.push_back({creators[k], true});
    prod.ops.push_back({annihilators[k], false});
  }
  FermionOperator a({prod});
  return cplx(0, 1) * (a - a.adjoint());
}

PauliSum qubit_excitation_generator(const std::vector<int>& creators,
                                    const std::vector<int>& annihilators) {
  check_excitation(creators, annihilators);
  auto sigma = [](int j, bool plus) {
    PauliWord wx, wy;
    wx.set(j, Axis::X);
    wy.set(j, Axis::Y);
    return PauliSum({{wx, 0.5}, {wy, plus ? cplx(0, -0.5) : cplx(0, 0.5)}});
  };
  PauliSum a = PauliSum::constant(1.0);
  for (std::size_t k = 0; k < creators.size(); ++k)
    a = a * sigma(creators[k], true) * sigma(annihilators[k], false);
  return cplx(0, 1) * (a - a.adjoint());
}

PauliSum paired_generator_jw(int p, int q, int n_orbitals, SpinLayout layout) {
  if (p == q) throw std::invalid_argument("paired generator needs distinct orbitals");
  const int pu = spin_orbital(p, Spin::Up, n_orbitals, layout);
  const int pd = spin_orbital(p, Spin::Down, n_orbitals, layout);
  const int qu = spin_orbital(q, Spin::Up, n_orbitals, layout);
  const int qd = spin_orbital(q, Spin::Down, n_orbitals, layout);
  return jordan_wigner(excitation_generator({pu, pd}, {qu, qd}), 2 * n_orbitals);
}

PauliSum paired_generator_hcb(int p, int q) {
  if (p == q) throw std::invalid_argument("paired generator needs distinct orbitals");
  return qubit_excitation_generator({p}, {q});
}

PauliSum nullspace_projector(const PauliSum& generator) {
  return PauliSum::constant(1.0) - generator * generator;
}

}  // namespace pairq
