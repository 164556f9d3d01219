#pragma once

#include <algorithm>
#include <cmath>

namespace cogol {

/// log(1 + exp(-t)) in the overflow-safe form max(-t, 0) + log1p(exp(-|t|)).
/// Finite for any finite t, including magnitudes around 1e4 and far beyond.
inline double logistic_phi(double t) {
  return std::max(-t, 0.0) + std::log1p(std::exp(-std::abs(t)));
}

/// Stable sigmoid; never evaluates exp on a positive argument.
inline double sigmoid(double t) {
  if (t >= 0.0) {
    return 1.0 / (1.0 + std::exp(-t));
  }
  const double e = std::exp(t);
  return e / (1.0 + e);
}

/// log(1 + exp(t)); strictly positive and smooth, d/dt = sigmoid(t).
inline double softplus(double t) { return logistic_phi(-t); }

}  // namespace cogol
