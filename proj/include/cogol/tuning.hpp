#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cogol/data.hpp"
#include "cogol/kernel.hpp"

namespace cogol {

struct SearchSpace {
  std::pair<double, double> alpha_range{1e-6, 10.0};
  std::pair<double, double> beta_range{1e-6, 10.0};
  std::optional<std::pair<double, double>> gamma_range;  // set => RBF dual fits
  int trials = 30;  // 30 for linear runs, 40 for kernel runs
};

struct TrialResult {
  int trial = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> gamma;
  double cv_mae = 0.0;  // +inf when the trial errored
  double cv_mse = 0.0;
  double cv_acc = 0.0;
  std::string status;   // "ok" or the error message
};

struct TuneResult {
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> gamma;
  double cv_mae = 0.0;
  int best_trial = 0;
  std::vector<TrialResult> table;
};

/// Seeded random search: per trial, sample (alpha, beta[, gamma])
/// log-uniformly, score by mean validation MAE over a stratified k-fold CV
/// (features standardized per fold on the fold's training part), return
/// the argmin and the full trial table. Ties in CV-MAE prefer the larger
/// beta. A trial that throws scores +inf and records the message.
/// Deterministic in (data, seed); trials run concurrently on `threads`
/// workers (0 = auto, 1 = sequential) with schedule-independent output.
TuneResult tune(const Dataset& data, Mode mode, const SearchSpace& space,
                int folds = 3, std::uint64_t seed = 0, int threads = 0);

std::string trial_table_csv(const std::vector<TrialResult>& table);

}  // namespace cogol
