#pragma once

#include <utility>
#include <vector>

#include "cogol/optimizer.hpp"

namespace cogol {

enum class KernelKind { Linear, RBF };

std::string to_string(KernelKind kind);
KernelKind kernel_kind_from_string(const std::string& s);

struct KernelSpec {
  KernelKind kind = KernelKind::RBF;
  double gamma = 0.0;             // RBF only, > 0
  Eigen::MatrixXd support_points; // m x p anchors of the dual representation
};

/// Per-threshold dual coefficients: row j represents
/// w_j = sum_i dual_coeffs(j, i) * phi(support_i) in the kernel's feature
/// space, so g_j(x) = theta_j - sum_i dual_coeffs(j, i) * K(support_i, x).
struct DualModel {
  Eigen::MatrixXd dual_coeffs;  // (k-1) x m
  Eigen::VectorXd thresholds;   // k-1
  KernelSpec spec;
  Mode mode = Mode::CoGOL;

  int k() const { return static_cast<int>(thresholds.size()) + 1; }
  Eigen::Index p() const { return spec.support_points.cols(); }
};

/// Entry (i, j) = exp(-gamma * ||X_i - Y_j||^2).
Eigen::MatrixXd rbf_gram(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y,
                         double gamma);

/// Kernel values of X's rows against the spec's support points, m x b.
Eigen::MatrixXd kernel_columns(const KernelSpec& spec, const Eigen::MatrixXd& X);

/// RBF bandwidth search interval [0.01, 100] / (2 tau0^2) where tau0 is
/// the nearest-rank (1/k)-quantile of the pairwise Euclidean distances.
/// Throws when tau0 = 0 (degenerate geometry, all points identical).
std::pair<double, double> gamma_range(const Eigen::MatrixXd& X, int k);

/// Fits the dual form of the OL/GOL/CoGOL objective: data term uses
/// g_j(x) = theta_j - a_j . kappa(x), the L2 penalty is a_j^T K a_j and the
/// deviation penalty (a_j - a_{j-1})^T K (a_j - a_{j-1}). Support points are
/// the full training set; K receives a 1e-10 diagonal jitter before fitting.
std::pair<DualModel, FitReport> fit_kernel(const Dataset& data, const FitSpec& spec,
                                           const KernelSpec& kspec);

Eigen::VectorXd decision_values(const DualModel& model, const Eigen::VectorXd& x);
int predict(const DualModel& model, const Eigen::VectorXd& x);
std::vector<int> predict(const DualModel& model, const Eigen::MatrixXd& X);

}  // namespace cogol
