// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "pairq/pauli.hpp"

namespace pairq {

// Interleaved: p_up = 2p, p_dn = 2p+1.  Blocked: p_up = p, p_dn = p + n_orbitals.
enum class SpinLayout { Interleaved, Blocked };

enum class Spin { Up = 0, Down = 1 };

int spin_orbital(int p, Spin s, int n_orbitals, SpinLayout layout);
std::string to_string(SpinLayout layout);
SpinLayout parse_spin_layout(const std::string& s);

struct Ladder {
  int index;
  bool creation;
};

struct FermionProduct {
  std::vector<Ladder> ops;  // leftmost operator first
  cplx coeff{1.0, 0.0};
};

class FermionOperator {
 public:
  FermionOperator() = default;
  explicit FermionOperator(std::vector<FermionProduct> products) : products_(std::move(products)) {}

  static FermionOperator scalar(cplx c) { return FermionOperator({FermionProduct{{}, c}}); }
  static FermionOperator creation(int p) { return FermionOperator({FermionProduct{{{p, true}}, 1.0}}); }
  static FermionOperator annihilation(int p) {
    return FermionOperator({FermionProduct{{{p, false}}, 1.0}});
  }

  const std::vector<FermionProduct>& products() const { return products_; }
  int max_index() const;
  FermionOperator adjoint() const;

  FermionOperator& operator+=(const FermionOperator& o);
  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
  friend FermionOperator operator-(FermionOperator a, const FermionOperator& b) {
    return a += cplx(-1.0) * b;
  }
  friend FermionOperator operator*(cplx c, FermionOperator a);
  friend FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

 private:
  std::vector<FermionProduct> products_;
};

PauliSum jordan_wigner(const FermionOperator& op, int n_spin_orbitals);

// JW image of a single ladder operator on qubit j: (X_j -/+ iY_j)/2 * Z_{j-1}...Z_0.
PauliSum jw_ladder(int j, bool creation);

// i(prod_k a^dag_{p_k} a_{q_k} - h.c.)
FermionOperator excitation_generator(const std::vector<int>& creators,
                                     const std::vector<int>& annihilators);

// Same product with sigma+/sigma- in place of the ladder operators (no Z strings).
PauliSum qubit_excitation_generator(const std::vector<int>& creators,
                                    const std::vector<int>& annihilators);

// JW image of the paired double moving the pair in spatial orbital q into p.
PauliSum paired_generator_jw(int p, int q, int n_orbitals,
                             SpinLayout layout = SpinLayout::Interleaved);

// i(sigma+_p sigma-_q - h.c.) on the one-qubit-per-orbital register.
PauliSum paired_generator_hcb(int p, int q);

// 1 - G^2 for generators with spectrum {-1, 0, 1}.
PauliSum nullspace_projector(const PauliSum& generator);

}  // namespace pairq
