#pragma once

#include <Eigen/Core>

namespace cogol {

/// The three threshold surrogates on a decision-value vector g of length
/// k-1. AllThresholds sums a term per threshold (bounds absolute error);
/// ImmediateThreshold only uses the two thresholds adjacent to the label
/// (bounds 0-1 error); CumulativeLogit is the proportional-odds negative
/// log-likelihood and requires sigma(g) increasing across the label's cell.
enum class LossKind { AllThresholds, ImmediateThreshold, CumulativeLogit };

double all_thresholds_loss(const Eigen::VectorXd& g, int y, int k);
double immediate_threshold_loss(const Eigen::VectorXd& g, int y, int k);

/// -log(sigma(g_y) - sigma(g_{y-1})) with sigma(g_0) = 0 and sigma(g_k) = 1.
/// Throws std::domain_error when the implied class probability is not
/// positive (possible under non-monotone g).
double cumulative_logit_nll(const Eigen::VectorXd& g, int y, int k);

double threshold_loss(LossKind kind, const Eigen::VectorXd& g, int y, int k);

/// CORAL-style loss: binary cross entropy against extended labels
/// [[y > j]] on logits h_j = theta_j + w . x with one shared weight vector.
double coral_loss_form(const Eigen::VectorXd& theta, const Eigen::VectorXd& w,
                       const Eigen::VectorXd& x, int y);

/// OR-CNN-style loss: per-output binary cross entropy on logits
/// h_j = theta_j + w_j . x with independent weight rows.
double orcnn_loss_form(const Eigen::VectorXd& theta, const Eigen::MatrixXd& W,
                       const Eigen::VectorXd& x, int y);

}  // namespace cogol
