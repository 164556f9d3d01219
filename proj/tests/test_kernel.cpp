#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "cogol/data.hpp"
#include "cogol/evaluation.hpp"
#include "cogol/kernel.hpp"
#include "cogol/losses.hpp"
#include "cogol/rng.hpp"

using namespace cogol;

namespace {

Eigen::MatrixXd random_points(Rng& rng, int n, int p) {
  Eigen::MatrixXd X(n, p);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < p; ++c) X(i, c) = rng.normal();
  }
  return X;
}

// independent reconstruction of the dual objective from its definition
double dual_objective_oracle(const Eigen::MatrixXd& K, const std::vector<int>& labels, int k,
                             const Eigen::MatrixXd& A, const Eigen::VectorXd& theta,
                             double alpha, double beta) {
  const Eigen::Index n = K.rows();
  double loss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::VectorXd g(k - 1);
    for (int j = 0; j < k - 1; ++j) g[j] = theta[j] - A.row(j).dot(K.col(i));
    loss += all_thresholds_loss(g, labels[static_cast<std::size_t>(i)], k);
  }
  double value = loss / static_cast<double>(n);
  for (int j = 0; j < k - 1; ++j) value += alpha * A.row(j).dot(K * A.row(j).transpose());
  for (int j = 1; j < k - 1; ++j) {
    const Eigen::RowVectorXd d = A.row(j) - A.row(j - 1);
    value += beta * d.dot(K * d.transpose());
  }
  return value;
}

}  // namespace

TEST_CASE("rbf gram basics") {
  Rng rng(3);
  const Eigen::MatrixXd X = random_points(rng, 8, 3);
  for (double gamma : {1e-3, 1.0, 1e6}) {
    const Eigen::MatrixXd K = rbf_gram(X, X, gamma);
    for (int i = 0; i < 8; ++i) CHECK(K(i, i) == 1.0);
    CHECK((K - K.transpose()).lpNorm<Eigen::Infinity>() == 0.0);
  }

  Eigen::MatrixXd a(1, 2), b(1, 2);
  a << 0.0, 0.0;
  b << 1.0, 0.0;
  CHECK(rbf_gram(a, b, 1.0)(0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

  Eigen::MatrixXd c(1, 3);
  CHECK_THROWS_AS(rbf_gram(a, c, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(rbf_gram(a, b, 0.0), std::invalid_argument);
}

TEST_CASE("rbf gram of random points is symmetric PSD") {
  Rng rng(7);
  const Eigen::MatrixXd X = random_points(rng, 20, 4);
  const Eigen::MatrixXd K = rbf_gram(X, X, 0.5);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(K);
  CHECK(eig.eigenvalues().minCoeff() >= -1e-10);
}

TEST_CASE("gamma range heuristic") {
  Eigen::MatrixXd two(2, 1);
  two << 0.0, 5.0;
  const auto [lo, hi] = gamma_range(two, 2);
  CHECK(lo == doctest::Approx(2e-4).epsilon(1e-12));
  CHECK(hi == doctest::Approx(2.0).epsilon(1e-12));

  Eigen::MatrixXd three(3, 1);
  three << 0.0, 3.0, 4.0;  // pairwise distances {3, 4, 1}
  const auto [lo3, hi3] = gamma_range(three, 3);
  CHECK(lo3 == doctest::Approx(0.005).epsilon(1e-12));
  CHECK(hi3 == doctest::Approx(50.0).epsilon(1e-12));

  // scaling features by c scales both bounds by 1/c^2
  Rng rng(11);
  const Eigen::MatrixXd X = random_points(rng, 15, 3);
  const auto [alo, ahi] = gamma_range(X, 4);
  const auto [blo, bhi] = gamma_range(Eigen::MatrixXd(2.5 * X), 4);
  CHECK(blo == doctest::Approx(alo / 6.25).epsilon(1e-10));
  CHECK(bhi == doctest::Approx(ahi / 6.25).epsilon(1e-10));

  Eigen::MatrixXd same(3, 2);
  same << 1.0, 2.0, 1.0, 2.0, 1.0, 2.0;
  CHECK_THROWS_AS(gamma_range(same, 2), InputError);
}

TEST_CASE("dual penalties are RKHS norms") {
  Rng rng(13);
  const Eigen::MatrixXd X = random_points(rng, 25, 3);
  Eigen::MatrixXd K = rbf_gram(X, X, 0.7);
  K.diagonal().array() += 1e-10;
  for (int t = 0; t < 100; ++t) {
    Eigen::VectorXd a(25);
    for (int i = 0; i < 25; ++i) a[i] = rng.normal();
    CHECK(a.dot(K * a) >= -1e-10);
  }
}

TEST_CASE("linear-kind dual norm equals the primal norm") {
  Rng rng(17);
  const Eigen::MatrixXd X = random_points(rng, 30, 4);
  const Eigen::MatrixXd K = X * X.transpose();
  for (int t = 0; t < 100; ++t) {
    Eigen::VectorXd a(30);
    for (int i = 0; i < 30; ++i) a[i] = rng.normal();
    const double dual = a.dot(K * a);
    const double primal = (X.transpose() * a).squaredNorm();
    CHECK(std::abs(dual - primal) <= 1e-8 * std::max(1.0, std::abs(primal)));
  }
}

TEST_CASE("dual objective is midpoint-convex and matches the fit report") {
  SyntheticSpec sspec;
  sspec.kind = SyntheticKind::ParallelBands;
  sspec.n = 60;
  sspec.k = 3;
  sspec.noise_sd = 0.4;
  sspec.seed = 21;
  const Dataset d = make_synthetic(sspec).data;

  KernelSpec kspec;
  kspec.kind = KernelKind::RBF;
  kspec.gamma = 0.5;

  FitSpec fspec;
  fspec.mode = Mode::CoGOL;
  fspec.pen = {1e-3, 1e-2};
  fspec.seed = 2;
  const auto [model, report] = fit_kernel(d, fspec, kspec);

  Eigen::MatrixXd K = rbf_gram(d.features, d.features, kspec.gamma);
  K.diagonal().array() += 1e-10;
  const double reconstructed = dual_objective_oracle(K, d.labels, d.k, model.dual_coeffs,
                                                     model.thresholds, 1e-3, 1e-2);
  CHECK(reconstructed == doctest::Approx(report.final_objective).epsilon(1e-9));

  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    Eigen::MatrixXd A1(2, 60), A2(2, 60);
    Eigen::VectorXd t1(2), t2(2);
    for (int j = 0; j < 2; ++j) {
      t1[j] = rng.normal();
      t2[j] = rng.normal();
      for (int i = 0; i < 60; ++i) {
        A1(j, i) = 0.3 * rng.normal();
        A2(j, i) = 0.3 * rng.normal();
      }
    }
    const double mid = dual_objective_oracle(K, d.labels, d.k, 0.5 * (A1 + A2),
                                             0.5 * (t1 + t2), 1e-3, 1e-2);
    const double ends = 0.5 * (dual_objective_oracle(K, d.labels, d.k, A1, t1, 1e-3, 1e-2) +
                               dual_objective_oracle(K, d.labels, d.k, A2, t2, 1e-3, 1e-2));
    CHECK(mid <= ends + 1e-8);
  }
}

TEST_CASE("linear-kind dual fit agrees with the primal fit") {
  SyntheticSpec sspec;
  sspec.kind = SyntheticKind::ParallelBands;
  sspec.n = 240;
  sspec.k = 4;
  sspec.noise_sd = 0.3;
  sspec.seed = 29;
  const Dataset all = make_synthetic(sspec).data;

  SplitPlan plan;
  plan.fractions = {0.667, 0.333};
  plan.seed = 5;
  const auto parts = split_indices(all, plan);
  const Standardized std_d = standardize(take(all, parts[0]), {take(all, parts[1])});

  FitSpec fspec;
  fspec.mode = Mode::CoGOL;
  fspec.pen = {1e-3, 0.1};
  fspec.seed = 7;

  const auto [primal, prep] = fit(std_d.train, fspec);
  KernelSpec kspec;
  kspec.kind = KernelKind::Linear;
  const auto [dual, drep] = fit_kernel(std_d.train, fspec, kspec);

  const auto preds_p = predict(primal, std_d.others[0].features);
  const auto preds_d = predict(dual, std_d.others[0].features);
  int agree = 0;
  for (std::size_t i = 0; i < preds_p.size(); ++i) {
    if (preds_p[i] == preds_d[i]) ++agree;
  }
  CHECK(static_cast<double>(agree) / preds_p.size() >= 0.95);
}

TEST_CASE("large beta ties the dual rows") {
  SyntheticSpec sspec;
  sspec.kind = SyntheticKind::ConcentricRings;
  sspec.n = 90;
  sspec.k = 3;
  sspec.noise_sd = 0.02;
  sspec.seed = 31;
  const Dataset d = make_synthetic(sspec).data;

  KernelSpec kspec;
  kspec.kind = KernelKind::RBF;
  const auto [glo, ghi] = gamma_range(d.features, d.k);
  kspec.gamma = std::sqrt(glo * ghi);

  FitSpec fspec;
  fspec.mode = Mode::CoGOL;
  fspec.pen = {1e-4, 1e9};
  fspec.seed = 3;
  const auto [model, report] = fit_kernel(d, fspec, kspec);

  Eigen::MatrixXd K = rbf_gram(d.features, d.features, kspec.gamma);
  K.diagonal().array() += 1e-10;
  for (Eigen::Index j = 1; j < model.dual_coeffs.rows(); ++j) {
    const Eigen::RowVectorXd diff = model.dual_coeffs.row(j) - model.dual_coeffs.row(j - 1);
    CHECK(diff.dot(K * diff.transpose()) <= 1e-6);
  }
}

TEST_CASE("zero dual coefficients predict from thresholds alone") {
  Rng rng(37);
  DualModel model;
  model.mode = Mode::CoGOL;
  model.dual_coeffs = Eigen::MatrixXd::Zero(2, 5);
  model.thresholds = Eigen::VectorXd(2);
  model.thresholds << -1.0, 0.5;  // one crossed threshold
  model.spec.kind = KernelKind::RBF;
  model.spec.gamma = 1.0;
  model.spec.support_points = random_points(rng, 5, 2);

  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXd x(2);
    x << rng.normal(), rng.normal();
    CHECK(predict(model, x) == 2);
  }
  CHECK_THROWS_AS(predict(model, Eigen::VectorXd(Eigen::VectorXd::Zero(3))),
                  std::invalid_argument);
}
