#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>

#include "cogol/objective.hpp"

namespace cogol {

struct FitSpec {
  Mode mode = Mode::CoGOL;
  PenaltySpec pen;
  int max_iters = 5000;
  double grad_tol = 1e-6;        // infinity norm of the full gradient
  std::uint64_t seed = 0;        // zero-plus-jitter initialization
  std::ostream* trace = nullptr; // per-iteration records, one line each
};

struct FitReport {
  double final_objective = 0.0;
  int iterations = 0;
  bool converged = false;  // implies grad_norm <= grad_tol
  double grad_norm = 0.0;
  double wall_time = 0.0;  // seconds
};

/// Smooth map from an unconstrained vector onto nondecreasing thresholds:
/// theta_1 = raw_1, theta_j = theta_{j-1} + softplus(raw_j).
Eigen::VectorXd theta_parametrization(const Eigen::VectorXd& raw);

/// Minimizes the convex fitting objective for the requested mode. OL (and
/// CoGOL with beta = +inf) ties all weight rows to a single shared vector
/// and optimizes thresholds through theta_parametrization, so the returned
/// thresholds are nondecreasing exactly. GOL is CoGOL with the deviation
/// term dropped; GOL/CoGOL thresholds are unconstrained.
/// Throws on invalid data, single-class labels, or a non-finite objective.
std::pair<OrdinalModel, FitReport> fit(const Dataset& data, const FitSpec& spec);

/// f(x, grad_out) -> value; grad_out arrives sized like x.
using ObjectiveFn = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct MinimizeOptions {
  int max_iters = 5000;
  double grad_tol = 1e-6;
  int history = 10;  // L-BFGS memory
  std::ostream* trace = nullptr;
};

struct MinimizeResult {
  Eigen::VectorXd x;
  double value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// L-BFGS two-loop direction with Armijo backtracking line search
/// (c = 1e-4, halving, initial step 1.0). Accepted steps never increase the
/// objective. Throws std::runtime_error naming the iteration if the
/// objective turns non-finite at an accepted point.
MinimizeResult minimize(const ObjectiveFn& f, Eigen::VectorXd x0,
                        const MinimizeOptions& opts);

}  // namespace cogol
