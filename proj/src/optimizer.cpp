#include "cogol/optimizer.hpp"

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

Eigen::VectorXd theta_parametrization(const Eigen::VectorXd& raw) {
  Eigen::VectorXd theta(raw.size());
  if (raw.size() == 0) return theta;
  theta[0] = raw[0];
  for (Eigen::Index j = 1; j < raw.size(); ++j) {
    theta[j] = theta[j - 1] + softplus(raw[j]);
  }
  return theta;
}

MinimizeResult minimize(const ObjectiveFn& f, Eigen::VectorXd x, const MinimizeOptions& opts) {
  const Eigen::Index dim = x.size();
  Eigen::VectorXd g(dim), g_try(dim), x_try(dim), d(dim), q(dim);

  double fx = f(x, g);
  if (!std::isfinite(fx)) {
    throw std::runtime_error("optimizer: non-finite objective at iteration 0");
  }

  std::vector<Eigen::VectorXd> S, Y;
  std::vector<double> rho;
  std::vector<double> alpha;

  int iter = 0;
  double gnorm = g.lpNorm<Eigen::Infinity>();
  if (opts.trace != nullptr) {
    *opts.trace << "iter=0 obj=" << fx << " grad_inf=" << gnorm << " step=0\n";
  }
  bool converged = gnorm <= opts.grad_tol;

  while (!converged && iter < opts.max_iters) {
    // L-BFGS two-loop recursion; falls back to steepest descent when the
    // history is empty or produces a non-descent direction.
    q = g;
    alpha.assign(S.size(), 0.0);
    for (int h = static_cast<int>(S.size()) - 1; h >= 0; --h) {
      alpha[static_cast<std::size_t>(h)] = rho[static_cast<std::size_t>(h)] * S[static_cast<std::size_t>(h)].dot(q);
      q -= alpha[static_cast<std::size_t>(h)] * Y[static_cast<std::size_t>(h)];
    }
    if (!S.empty()) {
      q *= S.back().dot(Y.back()) / Y.back().squaredNorm();
    }
    for (std::size_t h = 0; h < S.size(); ++h) {
      const double b = rho[h] * Y[h].dot(q);
      q += S[h] * (alpha[h] - b);
    }
    d = -q;
    double dg = g.dot(d);
    if (!(dg < 0.0) || !d.allFinite()) {
      S.clear(); Y.clear(); rho.clear();
      d = -g;
      dg = -g.squaredNorm();
    }

    // Armijo backtracking: halve from t = 1 until sufficient decrease.
    // Non-finite trial values (overshoot) are rejected like failed steps.
    const double c = 1e-4;
    double t = 1.0;
    double f_try = fx;
    bool accepted = false;
    for (int halve = 0; halve < 64; ++halve) {
      x_try = x + t * d;
      f_try = f(x_try, g_try);
      if (std::isfinite(f_try) && f_try <= fx + c * t * dg) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (!S.empty()) {
        // stale curvature; drop it and retry along the gradient
        S.clear(); Y.clear(); rho.clear();
        continue;
      }
      break;  // no decrease possible at double precision
    }

    ++iter;
    Eigen::VectorXd s = x_try - x;
    Eigen::VectorXd yv = g_try - g;
    const double sy = s.dot(yv);
    if (sy > 1e-12 * s.norm() * yv.norm()) {
      S.push_back(std::move(s));
      Y.push_back(std::move(yv));
      rho.push_back(1.0 / sy);
      if (static_cast<int>(S.size()) > opts.history) {
        S.erase(S.begin());
        Y.erase(Y.begin());
        rho.erase(rho.begin());
      }
    }
    x.swap(x_try);
    g.swap(g_try);
    fx = f_try;
    gnorm = g.lpNorm<Eigen::Infinity>();
    if (opts.trace != nullptr) {
      *opts.trace << "iter=" << iter << " obj=" << fx << " grad_inf=" << gnorm
                  << " step=" << t << "\n";
    }
    converged = gnorm <= opts.grad_tol;
  }

  MinimizeResult res;
  res.x = std::move(x);
  res.value = fx;
  res.grad_norm = gnorm;
  res.iterations = iter;
  res.converged = converged;
  return res;
}

namespace {

Eigen::VectorXd jitter_init(Eigen::Index dim, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXd x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) x[i] = rng.uniform(-1e-3, 1e-3);
  return x;
}

void check_fit_inputs(const Dataset& data, const FitSpec& spec) {
  validate(data);
  validate(spec.pen);
  if (spec.max_iters < 1) throw std::invalid_argument("fit: max_iters must be >= 1");
  if (!(spec.grad_tol > 0.0)) throw std::invalid_argument("fit: grad_tol must be positive");
  const int first = data.labels.front();
  const bool single_class =
      std::all_of(data.labels.begin(), data.labels.end(), [&](int y) { return y == first; });
  if (single_class) {
    throw std::runtime_error("fit: degenerate labels, only class " + std::to_string(first) +
                             " present in the training data");
  }
}

}  // namespace

std::pair<OrdinalModel, FitReport> fit(const Dataset& data, const FitSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  check_fit_inputs(data, spec);

  const Eigen::Index p = data.p();
  const Eigen::Index m = data.k - 1;
  const bool tied =
      spec.mode == Mode::OL || (spec.mode == Mode::CoGOL && std::isinf(spec.pen.beta));
  const double beta_eff = (spec.mode == Mode::GOL) ? 0.0 : spec.pen.beta;

  MinimizeOptions mopts;
  mopts.max_iters = spec.max_iters;
  mopts.grad_tol = spec.grad_tol;
  mopts.trace = spec.trace;

  OrdinalModel model;
  model.mode = spec.mode;
  MinimizeResult res;

  if (tied) {
    // single shared weight row; thresholds through the monotone map
    auto obj = [&](const Eigen::VectorXd& x, Eigen::VectorXd& grad) -> double {
      const Eigen::VectorXd w = x.head(p);
      const Eigen::VectorXd raw = x.tail(m);
      OrdinalModel cur;
      cur.weights = w.transpose().replicate(m, 1);
      cur.thresholds = theta_parametrization(raw);
      cur.mode = spec.mode;
      CogolGradient cg;
      const double val =
          detail::cogol_objective_grad_unchecked(cur, data, {spec.pen.alpha, 0.0}, &cg);
      grad.head(p) = cg.weights.colwise().sum().transpose();
      double suffix = 0.0;
      for (Eigen::Index j = m - 1; j >= 0; --j) {
        suffix += cg.thresholds[j];
        grad[p + j] = (j == 0) ? suffix : sigmoid(raw[j]) * suffix;
      }
      return val;
    };
    res = minimize(obj, jitter_init(p + m, spec.seed), mopts);
    const Eigen::VectorXd w = res.x.head(p);
    model.weights = w.transpose().replicate(m, 1);
    model.thresholds = theta_parametrization(res.x.tail(m));
  } else {
    if (std::isinf(beta_eff)) {
      throw std::invalid_argument("fit: beta must be finite for untied modes");
    }
    const PenaltySpec pen{spec.pen.alpha, beta_eff};
    auto obj = [&](const Eigen::VectorXd& x, Eigen::VectorXd& grad) -> double {
      OrdinalModel cur;
      cur.weights = Eigen::Map<const Eigen::MatrixXd>(x.data(), m, p);
      cur.thresholds = x.tail(m);
      cur.mode = spec.mode;
      CogolGradient cg;
      const double val = detail::cogol_objective_grad_unchecked(cur, data, pen, &cg);
      Eigen::Map<Eigen::MatrixXd>(grad.data(), m, p) = cg.weights;
      grad.tail(m) = cg.thresholds;
      return val;
    };
    res = minimize(obj, jitter_init(m * p + m, spec.seed), mopts);
    model.weights = Eigen::Map<const Eigen::MatrixXd>(res.x.data(), m, p);
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

}  // namespace cogol
