#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cogol/evaluation.hpp"
#include "cogol/tuning.hpp"

namespace cogol {

struct BenchmarkOptions {
  std::vector<Mode> modes{Mode::OL, Mode::GOL, Mode::CoGOL};
  int reps = 30;
  std::uint64_t seed = 0;
  double test_fraction = 0.25;
  int folds = 3;
  int trials = 30;          // inner random-search budget per split
  bool kernel_rbf = false;  // fit RBF dual models instead of primal linear
  int threads = 0;          // 0 = auto over replications
};

struct RepResult {
  int rep = 0;
  Mode mode = Mode::OL;
  EvalReport test;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> gamma;
};

struct BenchmarkResult {
  std::vector<RepResult> rows;  // rep-major, then mode order

  std::vector<double> metric_series(Mode mode, const std::string& metric) const;
  double mean_metric(Mode mode, const std::string& metric) const;
};

/// The replication protocol: per rep, a seeded stratified 75/25 train/test
/// split, per-split standardization on the training statistics, inner
/// random-search tuning per mode on the training part, a final fit with the
/// selected parameters, and test-set evaluation. Every mode sees the same
/// splits so the per-rep metrics pair up for signed-rank comparisons.
BenchmarkResult run_benchmark(const Dataset& data, const BenchmarkOptions& opts);

}  // namespace cogol
