#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "cogol/dataset.hpp"

namespace cogol {

/// OL:    one shared weight vector, nondecreasing thresholds.
/// GOL:   one weight vector per threshold, no coupling.
/// CoGOL: per-threshold weights with a deviation penalty tying neighbors.
enum class Mode { OL, GOL, CoGOL };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

/// Regularization strengths for the fitting objective. `beta` may be
/// +infinity; that limit is realized structurally by the optimizer (a single
/// shared weight row), never as arithmetic on an infinite value.
struct PenaltySpec {
  double alpha = 0.0;  // L2 strength, >= 0
  double beta = 0.0;   // deviation strength, >= 0 or +inf
};

void validate(const PenaltySpec& pen);

/// Linear threshold model. Row j of `weights` is the weight vector for
/// threshold j. In OL mode all rows are identical and thresholds are
/// nondecreasing.
struct OrdinalModel {
  Eigen::MatrixXd weights;     // (k-1) x p
  Eigen::VectorXd thresholds;  // k-1
  Mode mode = Mode::CoGOL;

  int k() const { return static_cast<int>(thresholds.size()) + 1; }
  Eigen::Index p() const { return weights.cols(); }
};

/// g_j(x) = theta_j - w_j . x (per-threshold weights; in OL mode the rows
/// coincide so this reduces to theta_j - w . x).
Eigen::VectorXd decision_values(const OrdinalModel& model, const Eigen::VectorXd& x);

/// Prediction counts crossed thresholds: 1 + #{ j : g_j(x) < 0 }, strict
/// inequality, so g = 0 everywhere predicts class 1. Non-monotone decision
/// values are accepted; the count is still well-defined.
int predict_from_decision_values(const Eigen::VectorXd& g);
int predict(const OrdinalModel& model, const Eigen::VectorXd& x);
std::vector<int> predict(const OrdinalModel& model, const Eigen::MatrixXd& X);

}  // namespace cogol
