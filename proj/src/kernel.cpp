#include "cogol/kernel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "cogol/math.hpp"
#include "cogol/rng.hpp"

namespace cogol {

namespace detail {
double cogol_objective_grad_unchecked(const OrdinalModel& model, const Dataset& data,
                                      const PenaltySpec& pen, CogolGradient* grad);
}

std::string to_string(KernelKind kind) {
  return kind == KernelKind::Linear ? "linear" : "rbf";
}

KernelKind kernel_kind_from_string(const std::string& s) {
  if (s == "linear") return KernelKind::Linear;
  if (s == "rbf") return KernelKind::RBF;
  throw std::invalid_argument("unknown kernel kind '" + s + "' (expected linear or rbf)");
}

Eigen::MatrixXd rbf_gram(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y, double gamma) {
  if (X.cols() != Y.cols()) {
    throw std::invalid_argument("rbf_gram: expected feature dimension " +
                                std::to_string(X.cols()) + ", got " + std::to_string(Y.cols()));
  }
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("rbf_gram: gamma must be positive");
  }
  const Eigen::VectorXd x2 = X.rowwise().squaredNorm();
  const Eigen::VectorXd y2 = Y.rowwise().squaredNorm();
  Eigen::MatrixXd d2 = -2.0 * (X * Y.transpose());
  d2.colwise() += x2;
  d2.rowwise() += y2.transpose();
  d2 = d2.cwiseMax(0.0);
  if (X.data() == Y.data() && X.rows() == Y.rows()) {
    // exact symmetry and a zero diagonal for self-grams
    d2 = (0.5 * (d2 + d2.transpose())).eval();
    d2.diagonal().setZero();
  }
  return (-gamma * d2).array().exp();
}

Eigen::MatrixXd kernel_columns(const KernelSpec& spec, const Eigen::MatrixXd& X) {
  if (spec.support_points.cols() != X.cols()) {
    throw std::invalid_argument("kernel_columns: expected feature dimension " +
                                std::to_string(spec.support_points.cols()) + ", got " +
                                std::to_string(X.cols()));
  }
  if (spec.kind == KernelKind::RBF) {
    return rbf_gram(spec.support_points, X, spec.gamma);
  }
  return spec.support_points * X.transpose();
}

std::pair<double, double> gamma_range(const Eigen::MatrixXd& X, int k) {
  const Eigen::Index n = X.rows();
  if (n < 2) throw std::invalid_argument("gamma_range: need at least 2 points");
  if (k < 2) throw std::invalid_argument("gamma_range: need k >= 2");

  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      dists.push_back((X.row(i) - X.row(j)).norm());
    }
  }
  std::sort(dists.begin(), dists.end());

  // nearest-rank (1/k)-quantile
  const std::size_t m = dists.size();
  std::size_t rank = static_cast<std::size_t>(
      std::ceil(static_cast<double>(m) / static_cast<double>(k)));
  rank = std::clamp<std::size_t>(rank, 1, m);
  const double tau0 = dists[rank - 1];
  if (!(tau0 > 0.0)) {
    throw InputError("gamma_range: degenerate geometry, the (1/k)-quantile of pairwise "
                     "distances is zero (coincident points)");
  }
  const double denom = 2.0 * tau0 * tau0;
  return {0.01 / denom, 100.0 / denom};
}

namespace {

Eigen::VectorXd jitter_init(Eigen::Index dim, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXd x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) x[i] = rng.uniform(-1e-3, 1e-3);
  return x;
}

// Dual objective: mean all-thresholds loss on g_j(x_i) = theta_j - a_j . K_i
// plus RKHS penalties alpha a_j^T K a_j and beta (a_j - a_{j-1})^T K (a_j - a_{j-1}).
double dual_objective(const Eigen::MatrixXd& K, const std::vector<int>& labels,
                      const Eigen::MatrixXd& A, const Eigen::VectorXd& theta,
                      double alpha, double beta,
                      Eigen::MatrixXd* Agrad, Eigen::VectorXd* tgrad) {
  const Eigen::Index n = K.rows();
  const Eigen::Index m = theta.size();

  const Eigen::MatrixXd AK = A * K;  // m x n, reused for scores and penalties
  double loss = 0.0;
  Eigen::MatrixXd D;
  if (Agrad != nullptr || tgrad != nullptr) D.resize(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int y = labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m; ++j) {
      const double g = theta[j] - AK(j, i);
      const double s = (j < y - 1) ? -1.0 : 1.0;
      const double t = s * g;
      loss += logistic_phi(t);
      if (D.size() > 0) D(i, j) = -s * sigmoid(-t);
    }
  }
  double value = loss / static_cast<double>(n);

  value += alpha * AK.cwiseProduct(A).sum();
  for (Eigen::Index r = 1; r < m; ++r) {
    value += beta * (A.row(r) - A.row(r - 1)).dot(AK.row(r) - AK.row(r - 1));
  }

  if (Agrad != nullptr) {
    *Agrad = -(D.transpose() * K) / static_cast<double>(n);
    *Agrad += 2.0 * alpha * AK;
    for (Eigen::Index r = 1; r < m; ++r) {
      const Eigen::RowVectorXd dK = AK.row(r) - AK.row(r - 1);
      Agrad->row(r) += 2.0 * beta * dK;
      Agrad->row(r - 1) -= 2.0 * beta * dK;
    }
  }
  if (tgrad != nullptr) {
    *tgrad = D.colwise().sum().transpose() / static_cast<double>(n);
  }
  return value;
}

}  // namespace

std::pair<DualModel, FitReport> fit_kernel(const Dataset& data, const FitSpec& spec,
                                           const KernelSpec& kspec) {
  const auto t0 = std::chrono::steady_clock::now();
  validate(data);
  validate(spec.pen);
  if (spec.max_iters < 1) throw std::invalid_argument("fit_kernel: max_iters must be >= 1");
  if (!(spec.grad_tol > 0.0)) throw std::invalid_argument("fit_kernel: grad_tol must be positive");
  if (kspec.kind == KernelKind::RBF && !(kspec.gamma > 0.0)) {
    throw std::invalid_argument("fit_kernel: RBF kernel requires gamma > 0");
  }
  {
    const int first = data.labels.front();
    const bool single =
        std::all_of(data.labels.begin(), data.labels.end(), [&](int y) { return y == first; });
    if (single) {
      throw std::runtime_error("fit_kernel: degenerate labels, only class " +
                               std::to_string(first) + " present in the training data");
    }
  }

  const Eigen::Index n = data.n();
  const Eigen::Index m = data.k - 1;

  KernelSpec used = kspec;
  used.support_points = data.features;  // full training set anchors the dual

  Eigen::MatrixXd K = (used.kind == KernelKind::RBF)
                          ? rbf_gram(used.support_points, used.support_points, used.gamma)
                          : Eigen::MatrixXd(used.support_points * used.support_points.transpose());
  if (!K.allFinite()) {
    throw std::runtime_error("fit_kernel: non-finite Gram matrix");
  }
  K.diagonal().array() += 1e-10;  // PSD safety jitter
  if (spec.trace != nullptr) {
    *spec.trace << "gram: " << n << "x" << n << " " << to_string(used.kind)
                << " kernel, diagonal jitter 1e-10\n";
  }

  const bool tied =
      spec.mode == Mode::OL || (spec.mode == Mode::CoGOL && std::isinf(spec.pen.beta));
  const double beta_eff = (spec.mode == Mode::GOL) ? 0.0 : spec.pen.beta;

  MinimizeOptions mopts;
  mopts.max_iters = spec.max_iters;
  mopts.grad_tol = spec.grad_tol;
  mopts.trace = spec.trace;

  DualModel model;
  model.spec = used;
  model.mode = spec.mode;
  MinimizeResult res;

  if (tied) {
    auto obj = [&](const Eigen::VectorXd& x, Eigen::VectorXd& grad) -> double {
      const Eigen::VectorXd raw = x.tail(m);
      Eigen::MatrixXd A = x.head(n).transpose().replicate(m, 1);
      const Eigen::VectorXd theta = theta_parametrization(raw);
      Eigen::MatrixXd Ag;
      Eigen::VectorXd tg;
      const double val = dual_objective(K, data.labels, A, theta, spec.pen.alpha, 0.0, &Ag, &tg);
      grad.head(n) = Ag.colwise().sum().transpose();
      double suffix = 0.0;
      for (Eigen::Index j = m - 1; j >= 0; --j) {
        suffix += tg[j];
        grad[n + j] = (j == 0) ? suffix : sigmoid(raw[j]) * suffix;
      }
      return val;
    };
    res = minimize(obj, jitter_init(n + m, spec.seed), mopts);
    model.dual_coeffs = res.x.head(n).transpose().replicate(m, 1);
    model.thresholds = theta_parametrization(res.x.tail(m));
  } else {
    if (std::isinf(beta_eff)) {
      throw std::invalid_argument("fit_kernel: beta must be finite for untied modes");
    }
    auto obj = [&](const Eigen::VectorXd& x, Eigen::VectorXd& grad) -> double {
      const Eigen::MatrixXd A = Eigen::Map<const Eigen::MatrixXd>(x.data(), m, n);
      const Eigen::VectorXd theta = x.tail(m);
      Eigen::MatrixXd Ag;
      Eigen::VectorXd tg;
      const double val =
          dual_objective(K, data.labels, A, theta, spec.pen.alpha, beta_eff, &Ag, &tg);
      Eigen::Map<Eigen::MatrixXd>(grad.data(), m, n) = Ag;
      grad.tail(m) = tg;
      return val;
    };
    res = minimize(obj, jitter_init(m * n + m, spec.seed), mopts);
    model.dual_coeffs = Eigen::Map<const Eigen::MatrixXd>(res.x.data(), m, n);
    model.thresholds = res.x.tail(m);
  }

  FitReport report;
  report.final_objective = res.value;
  report.iterations = res.iterations;
  report.converged = res.converged;
  report.grad_norm = res.grad_norm;
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(model), report};
}

Eigen::VectorXd decision_values(const DualModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.p()) {
    throw std::invalid_argument("decision_values: expected feature vector of length " +
                                std::to_string(model.p()) + ", got " + std::to_string(x.size()));
  }
  const Eigen::MatrixXd cols = kernel_columns(model.spec, x.transpose());  // m_support x 1
  return model.thresholds - model.dual_coeffs * cols.col(0);
}

int predict(const DualModel& model, const Eigen::VectorXd& x) {
  return predict_from_decision_values(decision_values(model, x));
}

std::vector<int> predict(const DualModel& model, const Eigen::MatrixXd& X) {
  if (X.cols() != model.p()) {
    throw std::invalid_argument("predict: expected " + std::to_string(model.p()) +
                                " feature columns, got " + std::to_string(X.cols()));
  }
  const Eigen::MatrixXd cols = kernel_columns(model.spec, X);        // m_support x b
  const Eigen::MatrixXd scores = model.dual_coeffs * cols;           // (k-1) x b
  std::vector<int> preds(static_cast<std::size_t>(X.rows()));
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    int crossed = 0;
    for (Eigen::Index j = 0; j < scores.rows(); ++j) {
      if (model.thresholds[j] - scores(j, i) < 0.0) ++crossed;
    }
    preds[static_cast<std::size_t>(i)] = 1 + crossed;
  }
  return preds;
}

}  // namespace cogol
