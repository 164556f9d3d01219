#include "cogol/model.hpp"

#include <cmath>
#include <stdexcept>

namespace cogol {

void validate(const Dataset& data) {
  if (data.n() < 1) throw std::invalid_argument("dataset: expected n >= 1, got 0 rows");
  if (data.p() < 1) throw std::invalid_argument("dataset: expected p >= 1, got 0 feature columns");
  if (data.k < 2) {
    throw std::invalid_argument("dataset: expected k >= 2 classes, got " + std::to_string(data.k));
  }
  if (static_cast<Eigen::Index>(data.labels.size()) != data.n()) {
    throw std::invalid_argument("dataset: expected " + std::to_string(data.n()) +
                                " labels, got " + std::to_string(data.labels.size()));
  }
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    const int y = data.labels[i];
    if (y < 1 || y > data.k) {
      throw std::invalid_argument("dataset: label " + std::to_string(y) + " at row " +
                                  std::to_string(i) + " outside 1.." + std::to_string(data.k));
    }
  }
  if (!data.features.allFinite()) {
    throw std::invalid_argument("dataset: feature matrix contains non-finite values");
  }
}

Dataset take(const Dataset& data, const std::vector<int>& indices) {
  Dataset out;
  out.k = data.k;
  out.features.resize(static_cast<Eigen::Index>(indices.size()), data.p());
  out.labels.reserve(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    out.features.row(static_cast<Eigen::Index>(r)) = data.features.row(indices[r]);
    out.labels.push_back(data.labels[static_cast<std::size_t>(indices[r])]);
  }
  return out;
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::OL: return "ol";
    case Mode::GOL: return "gol";
    case Mode::CoGOL: return "cogol";
  }
  return "cogol";
}

Mode mode_from_string(const std::string& s) {
  if (s == "ol") return Mode::OL;
  if (s == "gol") return Mode::GOL;
  if (s == "cogol") return Mode::CoGOL;
  throw std::invalid_argument("unknown mode '" + s + "' (expected ol, gol or cogol)");
}

void validate(const PenaltySpec& pen) {
  if (!(pen.alpha >= 0.0) || std::isnan(pen.alpha) || std::isinf(pen.alpha)) {
    throw std::invalid_argument("penalty: alpha must be finite and >= 0");
  }
  if (!(pen.beta >= 0.0) || std::isnan(pen.beta)) {
    throw std::invalid_argument("penalty: beta must be >= 0 (or +inf)");
  }
}

Eigen::VectorXd decision_values(const OrdinalModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.p()) {
    throw std::invalid_argument("decision_values: expected feature vector of length " +
                                std::to_string(model.p()) + ", got " + std::to_string(x.size()));
  }
  return model.thresholds - model.weights * x;
}

int predict_from_decision_values(const Eigen::VectorXd& g) {
  int crossed = 0;
  for (Eigen::Index j = 0; j < g.size(); ++j) {
    if (g[j] < 0.0) ++crossed;
  }
  return 1 + crossed;
}

int predict(const OrdinalModel& model, const Eigen::VectorXd& x) {
  return predict_from_decision_values(decision_values(model, x));
}

std::vector<int> predict(const OrdinalModel& model, const Eigen::MatrixXd& X) {
  if (X.cols() != model.p()) {
    throw std::invalid_argument("predict: expected " + std::to_string(model.p()) +
                                " feature columns, got " + std::to_string(X.cols()));
  }
  // G(i, j) = theta_j - w_j . x_i
  Eigen::MatrixXd G = -(X * model.weights.transpose());
  G.rowwise() += model.thresholds.transpose();
  std::vector<int> preds(static_cast<std::size_t>(X.rows()));
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    int crossed = 0;
    for (Eigen::Index j = 0; j < G.cols(); ++j) {
      if (G(i, j) < 0.0) ++crossed;
    }
    preds[static_cast<std::size_t>(i)] = 1 + crossed;
  }
  return preds;
}

}  // namespace cogol
