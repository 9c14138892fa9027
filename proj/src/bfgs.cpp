// Copyright 2026 The pairq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairq/bfgs.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace pairq {

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

namespace {

using Vec = Eigen::VectorXd;

Vec to_vec(const std::vector<double>& v) { return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size())); }
std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

struct Point {
  double alpha = 0.0;
  double f = 0.0;
  double d = 0.0;  // directional derivative
  Vec x, g;
};

// Minimizer of the cubic through (a, fa, da) and (b, fb, db); NaN if none.
double cubic_min(double a, double fa, double da, double b, double fb, double db) {
  const double d1 = da + db - 3.0 * (fa - fb) / (a - b);
  const double disc = d1 * d1 - da * db;
  if (disc < 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double d2 = std::copysign(std::sqrt(disc), b - a);
  return b - (b - a) * (db + d2 - d1) / (db - da + 2.0 * d2);
}

class LineSearch {
 public:
  LineSearch(const Objective& fn, const Vec& x0, double f0, const Vec& p, double d0,
             const BfgsOptions& opt, int& n_evals)
      : fn_(fn), x0_(x0), f0_(f0), p_(p), d0_(d0), opt_(opt), n_evals_(n_evals) {}

  // Returns true with *out set on success.
  bool run(double alpha1, Point* out) {
    Point prev{0.0, f0_, d0_, x0_, {}};
    double alpha = alpha1;
    for (int i = 0; i < opt_.max_line_search; ++i) {
      Point cur = eval(alpha);
      if (!std::isfinite(cur.f)) {
        alpha = 0.5 * (prev.alpha + alpha);
        continue;
      }
      if (cur.f > f0_ + opt_.c1 * alpha * d0_ || (i > 0 && cur.f >= prev.f))
        return zoom(prev, cur, out);
      if (std::abs(cur.d) <= -opt_.c2 * d0_) {
        *out = cur;
        return true;
      }
      if (cur.d >= 0.0) return zoom(cur, prev, out);
      prev = cur;
      alpha *= 2.0;
    }
    return fallback(out);
  }

 private:
  Point eval(double alpha) {
    Point pt;
    pt.alpha = alpha;
    pt.x = x0_ + alpha * p_;
    std::vector<double> g;
    pt.f = fn_(to_std(pt.x), g);
    ++n_evals_;
    pt.g = to_vec(g);
    pt.d = pt.g.dot(p_);
    if (std::isfinite(pt.f) && pt.f <= f0_ + opt_.c1 * alpha * d0_ && (!best_ || pt.f < best_->f))
      best_ = pt;
    return pt;
  }

  bool zoom(Point lo, Point hi, Point* out) {
    for (int i = 0; i < opt_.max_line_search; ++i) {
      const double a = lo.alpha, b = hi.alpha;
      const double lo_b = std::min(a, b), hi_b = std::max(a, b), w = hi_b - lo_b;
      if (w < 1e-16 * std::max(1.0, hi_b)) break;
      double t = cubic_min(lo.alpha, lo.f, lo.d, hi.alpha, hi.f, hi.d);
      if (!std::isfinite(t) || t < lo_b + 0.1 * w || t > hi_b - 0.1 * w) t = 0.5 * (a + b);
      Point cur = eval(t);
      if (!std::isfinite(cur.f) || cur.f > f0_ + opt_.c1 * t * d0_ || cur.f >= lo.f) {
        hi = cur;
      } else {
        if (std::abs(cur.d) <= -opt_.c2 * d0_) {
          *out = cur;
          return true;
        }
        if (cur.d * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
        lo = cur;
      }
    }
    return fallback(out);
  }

  // Accept the best sufficient-decrease point seen, if any.
  bool fallback(Point* out) {
    if (!best_ || best_->f >= f0_) return false;
    *out = *best_;
    return true;
  }

  const Objective& fn_;
  const Vec& x0_;
  double f0_;
  const Vec& p_;
  double d0_;
  const BfgsOptions& opt_;
  int& n_evals_;
  std::optional<Point> best_;
};

}  // namespace

BfgsResult bfgs(const Objective& fn, std::vector<double> x0, const BfgsOptions& opt) {
  BfgsResult r;
  const auto n = static_cast<Eigen::Index>(x0.size());
  std::vector<double> g0;
  r.f = fn(x0, g0);
  r.n_evals = 1;
  r.history.push_back(r.f);
  Vec x = to_vec(x0), g = to_vec(g0);
  if (!std::isfinite(r.f)) {
    r.x = x0;
    r.grad = g0;
    r.message = "non-finite objective at the starting point";
    return r;
  }
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(n, n);
  bool scaled = false;
  double f = r.f;
  while (true) {
    if (n == 0 || g.cwiseAbs().maxCoeff() < opt.tol_grad) {
      r.converged = true;
      r.message = "gradient below tolerance";
      break;
    }
    if (r.iterations >= opt.max_iter) {
      r.message = "iteration limit reached";
      break;
    }
    Vec p = -hinv * g;
    double d0 = g.dot(p);
    if (!(d0 < 0.0)) {
      hinv.setIdentity();
      p = -g;
      d0 = g.dot(p);
    }
    double alpha1 = 1.0;
    if (r.iterations == 0 && !scaled) alpha1 = std::min(1.0, 1.0 / g.cwiseAbs().maxCoeff());
    Point next;
    LineSearch ls(fn, x, f, p, d0, opt, r.n_evals);
    if (!ls.run(alpha1, &next)) {
      r.message = "line search found no decrease";
      break;
    }
    const Vec s = next.x - x;
    const Vec y = next.g - g;
    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm() && sy > 0.0) {
      if (!scaled) {
        hinv *= sy / y.dot(y);
        scaled = true;
      }
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd left = Eigen::MatrixXd::Identity(n, n) - rho * s * y.transpose();
      hinv = left * hinv * left.transpose() + rho * s * s.transpose();
    }
    x = next.x;
    g = next.g;
    f = next.f;
    ++r.iterations;
    r.history.push_back(f);
  }
  r.x = to_std(x);
  r.grad = to_std(g);
  r.f = f;
  return r;
}

}  // namespace pairq
