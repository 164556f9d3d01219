#include "cogol/losses.hpp"

#include <stdexcept>
#include <string>

#include "cogol/math.hpp"

namespace cogol {

namespace {

void check_label(const Eigen::VectorXd& g, int y, int k) {
  if (k < 2) throw std::invalid_argument("loss: expected k >= 2, got " + std::to_string(k));
  if (g.size() != k - 1) {
    throw std::invalid_argument("loss: expected " + std::to_string(k - 1) +
                                " decision values, got " + std::to_string(g.size()));
  }
  if (y < 1 || y > k) {
    throw std::invalid_argument("loss: label " + std::to_string(y) + " outside 1.." +
                                std::to_string(k));
  }
}

}  // namespace

double all_thresholds_loss(const Eigen::VectorXd& g, int y, int k) {
  check_label(g, y, k);
  double loss = 0.0;
  for (int j = 0; j < k - 1; ++j) {
    // thresholds below the label contribute phi(-g_j), the rest phi(g_j)
    loss += (j < y - 1) ? logistic_phi(-g[j]) : logistic_phi(g[j]);
  }
  return loss;
}

double immediate_threshold_loss(const Eigen::VectorXd& g, int y, int k) {
  check_label(g, y, k);
  double loss = 0.0;
  if (y > 1) loss += logistic_phi(-g[y - 2]);  // threshold just below y
  if (y < k) loss += logistic_phi(g[y - 1]);   // threshold just above y
  return loss;
}

double cumulative_logit_nll(const Eigen::VectorXd& g, int y, int k) {
  check_label(g, y, k);
  const double upper = (y == k) ? 1.0 : sigmoid(g[y - 1]);
  const double lower = (y == 1) ? 0.0 : sigmoid(g[y - 2]);
  const double prob = upper - lower;
  if (!(prob > 0.0)) {
    throw std::domain_error(
        "cumulative_logit_nll: non-positive class probability (sigma(g_y) <= sigma(g_{y-1})); "
        "decision values violate the proportional-odds ordering");
  }
  return -std::log(prob);
}

double threshold_loss(LossKind kind, const Eigen::VectorXd& g, int y, int k) {
  switch (kind) {
    case LossKind::AllThresholds: return all_thresholds_loss(g, y, k);
    case LossKind::ImmediateThreshold: return immediate_threshold_loss(g, y, k);
    case LossKind::CumulativeLogit: return cumulative_logit_nll(g, y, k);
  }
  throw std::invalid_argument("threshold_loss: unknown loss kind");
}

double coral_loss_form(const Eigen::VectorXd& theta, const Eigen::VectorXd& w,
                       const Eigen::VectorXd& x, int y) {
  if (w.size() != x.size()) {
    throw std::invalid_argument("coral_loss_form: expected feature vector of length " +
                                std::to_string(w.size()) + ", got " + std::to_string(x.size()));
  }
  const int k = static_cast<int>(theta.size()) + 1;
  if (y < 1 || y > k) {
    throw std::invalid_argument("coral_loss_form: label " + std::to_string(y) + " outside 1.." +
                                std::to_string(k));
  }
  const double wx = w.dot(x);
  double loss = 0.0;
  for (int j = 0; j < k - 1; ++j) {
    const double h = theta[j] + wx;
    const bool extended = y > j + 1;  // binary target [[y > j]]
    // -log sigma(h) for positive targets, -log(1 - sigma(h)) otherwise
    loss += extended ? logistic_phi(h) : logistic_phi(-h);
  }
  return loss;
}

double orcnn_loss_form(const Eigen::VectorXd& theta, const Eigen::MatrixXd& W,
                       const Eigen::VectorXd& x, int y) {
  if (W.rows() != theta.size()) {
    throw std::invalid_argument("orcnn_loss_form: expected " + std::to_string(theta.size()) +
                                " weight rows, got " + std::to_string(W.rows()));
  }
  if (W.cols() != x.size()) {
    throw std::invalid_argument("orcnn_loss_form: expected feature vector of length " +
                                std::to_string(W.cols()) + ", got " + std::to_string(x.size()));
  }
  const int k = static_cast<int>(theta.size()) + 1;
  if (y < 1 || y > k) {
    throw std::invalid_argument("orcnn_loss_form: label " + std::to_string(y) + " outside 1.." +
                                std::to_string(k));
  }
  double loss = 0.0;
  for (int j = 0; j < k - 1; ++j) {
    const double h = theta[j] + W.row(j).dot(x);
    const bool extended = y > j + 1;
    loss += extended ? logistic_phi(h) : logistic_phi(-h);
  }
  return loss;
}

}  // namespace cogol
