#include "cogol/objective.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cogol/math.hpp"

namespace cogol {

namespace {

void check_dims(const OrdinalModel& model, const Dataset& data) {
  if (model.p() != data.p()) {
    throw std::invalid_argument("cogol objective: expected p = " + std::to_string(data.p()) +
                                " weight columns, got " + std::to_string(model.p()));
  }
  if (model.k() != data.k) {
    throw std::invalid_argument("cogol objective: expected k = " + std::to_string(data.k) +
                                ", model has k = " + std::to_string(model.k()));
  }
  if (model.weights.rows() != model.thresholds.size()) {
    throw std::invalid_argument("cogol objective: weight rows (" +
                                std::to_string(model.weights.rows()) + ") != thresholds (" +
                                std::to_string(model.thresholds.size()) + ")");
  }
}

}  // namespace

namespace detail {

// May return a non-finite value; the optimizer's line search treats that as
// a rejected trial point. Dimension errors still throw.
double cogol_objective_grad_unchecked(const OrdinalModel& model, const Dataset& data,
                                      const PenaltySpec& pen, CogolGradient* grad) {
  check_dims(model, data);

  const Eigen::Index n = data.n();
  const Eigen::Index m = model.thresholds.size();  // k - 1
  const auto& W = model.weights;
  const auto& theta = model.thresholds;

  // G(i, j) = theta_j - w_j . x_i
  Eigen::MatrixXd G = -(data.features * W.transpose());
  G.rowwise() += theta.transpose();

  double loss = 0.0;
  Eigen::MatrixXd D;  // d(sample loss)/dG
  if (grad != nullptr) D.resize(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int y = data.labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m; ++j) {
      // thresholds below the label contribute phi(-g_j), the rest phi(g_j)
      const double s = (j < y - 1) ? -1.0 : 1.0;
      const double t = s * G(i, j);
      loss += logistic_phi(t);
      if (grad != nullptr) D(i, j) = -s * sigmoid(-t);
    }
  }
  double value = loss / static_cast<double>(n);

  value += pen.alpha * W.squaredNorm();
  for (Eigen::Index r = 1; r < m; ++r) {
    value += pen.beta * (W.row(r) - W.row(r - 1)).squaredNorm();
  }

  if (grad != nullptr) {
    grad->weights = -(D.transpose() * data.features) / static_cast<double>(n);
    grad->weights += 2.0 * pen.alpha * W;
    for (Eigen::Index r = 1; r < m; ++r) {
      const Eigen::RowVectorXd d = W.row(r) - W.row(r - 1);
      grad->weights.row(r) += 2.0 * pen.beta * d;
      grad->weights.row(r - 1) -= 2.0 * pen.beta * d;
    }
    grad->thresholds = D.colwise().sum().transpose() / static_cast<double>(n);
  }

  return value;
}

}  // namespace detail

double cogol_objective_grad(const OrdinalModel& model, const Dataset& data,
                            const PenaltySpec& pen, CogolGradient* grad) {
  validate(pen);
  if (std::isinf(pen.beta)) {
    throw std::invalid_argument(
        "cogol objective: beta must be finite (the +inf limit is realized by weight tying "
        "in the optimizer, not by evaluating the objective)");
  }
  const double value = detail::cogol_objective_grad_unchecked(model, data, pen, grad);
  if (!std::isfinite(value)) {
    throw std::runtime_error("cogol objective: non-finite value");
  }
  return value;
}

double cogol_objective(const OrdinalModel& model, const Dataset& data, const PenaltySpec& pen) {
  return cogol_objective_grad(model, data, pen, nullptr);
}

CogolGradient cogol_gradient(const OrdinalModel& model, const Dataset& data,
                             const PenaltySpec& pen) {
  CogolGradient grad;
  cogol_objective_grad(model, data, pen, &grad);
  return grad;
}

}  // namespace cogol
