// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pairq/circuit.hpp"

namespace pairq {

// Level 0: each excitation becomes Pauli-string rotations (basis change, CNOT
//          staircase, Rz).
// Level 1: paired doubles use a 13-CNOT block, singles a CNOT-CRy-CNOT Givens
//          rotation (plus a parity ladder when Z strings are present).
// Level 2: the HCB part of an SPA circuit becomes X / Ry / CRy / CNOT per pair;
//          gates after the bridge are compiled as in level 1.
// Levels 0 and 1 fold the reference and pair-double part of a bridged circuit
// into the JW register (exact on the all-zero input state).
Circuit compile(const Circuit& circuit, int level);

// Individual pieces, exposed for testing.
Circuit lower_to_jw(const Circuit& circuit);
void append_pauli_gadget(Circuit& out, const PauliString& term, const Param& param);
void append_double_block(Circuit& out, int a, int b, int c, int d, const Param& param);
void append_givens(Circuit& out, int creator, int annihilator, const Param& param);

}  // namespace pairq
