// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pairq {

// Malformed or inconsistent input data (files, integrals, active spaces).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ansatz names and flag combinations that the grammar rejects.
class GrammarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OptimizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pairq
