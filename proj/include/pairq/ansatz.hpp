// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "pairq/circuit.hpp"
#include "pairq/molecule.hpp"

namespace pairq {

// Ladder: S^l -> S^{l+1}.  Canonical: S^0 -> S^l.
enum class Arrangement { Ladder, Canonical };

std::string to_string(Arrangement a);
Arrangement parse_arrangement(const std::string& s);

// Excitation letters of an ansatz name, e.g. "GASD".
struct ExcitationFlags {
  bool g = false;  // generalized (all p<q instead of occupied x virtual)
  bool a = false;  // singles without Z strings
  bool s = false;
  bool d = false;  // paired doubles
};

struct AnsatzSpec {
  bool hcb = false;
  bool spa = false;
  ExcitationFlags flags;
  int k = 1;
  Arrangement arrangement = Arrangement::Ladder;
  bool shared_spin_singles = false;
  SpinLayout layout = SpinLayout::Interleaved;
  // Blocks appended after the main ansatz ("SPA+GS"), never SPA-restricted.
  std::vector<ExcitationFlags> extra;

  void validate() const;  // throws GrammarError
  std::string name() const;
};

// Grammar: [k-][HCB-][SPA-][UpCC]{G}{A}{S}{D} ( "+" [UpCC]{G}{A}{S}{D} )*
AnsatzSpec parse_ansatz(const std::string& name);

// One CNOT(p_up, p_dn) per spatial orbital.
Circuit hcb_to_jw_bridge(int n_orbitals, SpinLayout layout = SpinLayout::Interleaved);

Circuit build_spa(const PairStructure& pairs, Arrangement arrangement = Arrangement::Ladder,
                  SpinLayout layout = SpinLayout::Interleaved, bool hcb = false);
Circuit build_spa(const MolecularSystem& sys, Arrangement arrangement = Arrangement::Ladder,
                  SpinLayout layout = SpinLayout::Interleaved);

// Occupied orbitals are the pair references; all other orbitals are virtual.
Circuit build_ansatz(const PairStructure& pairs, const AnsatzSpec& spec);
Circuit build_ansatz(const MolecularSystem& sys, const AnsatzSpec& spec);

}  // namespace pairq
