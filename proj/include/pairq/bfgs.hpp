// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pairq {

struct BfgsOptions {
  double tol_grad = 1e-5;  // on the infinity norm
  int max_iter = 200;
  double c1 = 1e-4;
  double c2 = 0.9;
  int max_line_search = 40;
};

struct BfgsResult {
  std::vector<double> x;
  double f = 0.0;
  std::vector<double> grad;
  int iterations = 0;
  int n_evals = 0;
  std::vector<double> history;  // f at the start and after every accepted step
  bool converged = false;
  std::string message;
};

// Returns f(x) and writes the gradient into grad.
using Objective = std::function<double(const std::vector<double>& x, std::vector<double>& grad)>;

// Quasi-Newton BFGS with a strong-Wolfe line search (bracketing + cubic zoom).
BfgsResult bfgs(const Objective& fn, std::vector<double> x0, const BfgsOptions& opt = {});

double inf_norm(const std::vector<double>& v);

}  // namespace pairq
