#pragma once

#include "cogol/model.hpp"

namespace cogol {

struct CogolGradient {
  Eigen::MatrixXd weights;     // (k-1) x p
  Eigen::VectorXd thresholds;  // k-1
};

/// Mean all-thresholds loss over the dataset plus
///   alpha * sum_j ||w_j||^2  +  beta * sum_{j=2}^{k-1} ||w_j - w_{j-1}||^2.
/// Penalties are added once to the mean data loss, not per sample, so the
/// hyperparameters stay comparable across dataset sizes. beta must be finite.
double cogol_objective(const OrdinalModel& model, const Dataset& data,
                       const PenaltySpec& pen);

/// Exact analytic gradient of cogol_objective with respect to all weight
/// rows and thresholds.
CogolGradient cogol_gradient(const OrdinalModel& model, const Dataset& data,
                             const PenaltySpec& pen);

/// Single pass computing the objective and, when grad != nullptr, its
/// gradient. Shared by the public wrappers and the optimizer.
double cogol_objective_grad(const OrdinalModel& model, const Dataset& data,
                            const PenaltySpec& pen, CogolGradient* grad);

}  // namespace cogol
