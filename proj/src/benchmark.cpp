#include "cogol/benchmark.hpp"

#include <algorithm>
#include <stdexcept>

#include "cogol/rng.hpp"
#include "cogol/threading.hpp"

namespace cogol {

std::vector<double> BenchmarkResult::metric_series(Mode mode, const std::string& metric) const {
  std::vector<double> out;
  for (const auto& row : rows) {
    if (row.mode != mode) continue;
    if (metric == "mae") out.push_back(row.test.mae);
    else if (metric == "mse") out.push_back(row.test.mse);
    else if (metric == "acc") out.push_back(row.test.accuracy);
    else throw std::invalid_argument("unknown metric '" + metric + "' (expected mae, mse or acc)");
  }
  return out;
}

double BenchmarkResult::mean_metric(Mode mode, const std::string& metric) const {
  const auto series = metric_series(mode, metric);
  if (series.empty()) return 0.0;
  double sum = 0.0;
  for (double v : series) sum += v;
  return sum / static_cast<double>(series.size());
}

BenchmarkResult run_benchmark(const Dataset& data, const BenchmarkOptions& opts) {
  validate(data);
  if (opts.reps < 1) throw std::invalid_argument("benchmark: reps must be >= 1");
  if (!(opts.test_fraction > 0.0 && opts.test_fraction < 1.0)) {
    throw std::invalid_argument("benchmark: test fraction must lie in (0, 1)");
  }

  BenchmarkResult result;
  result.rows.resize(static_cast<std::size_t>(opts.reps) * opts.modes.size());

  parallel_for(opts.reps, opts.threads, [&](int rep) {
    const std::uint64_t rep_seed = mix_seed(opts.seed, static_cast<std::uint64_t>(rep));
    SplitPlan plan;
    plan.fractions = {1.0 - opts.test_fraction, opts.test_fraction};
    plan.seed = rep_seed;
    plan.stratified = true;
    const auto parts = split_indices(data, plan);
    const Dataset train = take(data, parts[0]);
    const Dataset test = take(data, parts[1]);
    const Standardized std_d = standardize(train, {test});

    for (std::size_t mi = 0; mi < opts.modes.size(); ++mi) {
      const Mode mode = opts.modes[mi];
      SearchSpace space;
      space.trials = opts.trials;
      if (opts.kernel_rbf) {
        space.gamma_range = gamma_range(std_d.train.features, data.k);
      }
      const std::uint64_t mode_seed = mix_seed(rep_seed, 100 + mi);
      // trials stay sequential here; the replication loop owns the threads
      const TuneResult tuned = tune(std_d.train, mode, space, opts.folds, mode_seed, 1);

      FitSpec fspec;
      fspec.mode = mode;
      fspec.pen = {tuned.alpha, tuned.beta};
      fspec.seed = mix_seed(mode_seed, 0xf17);
      std::vector<int> preds;
      if (tuned.gamma) {
        KernelSpec kspec;
        kspec.kind = KernelKind::RBF;
        kspec.gamma = *tuned.gamma;
        const auto [model, rep_unused] = fit_kernel(std_d.train, fspec, kspec);
        preds = predict(model, std_d.others[0].features);
      } else {
        const auto [model, rep_unused] = fit(std_d.train, fspec);
        preds = predict(model, std_d.others[0].features);
      }

      RepResult row;
      row.rep = rep;
      row.mode = mode;
      row.test = evaluate(preds, test.labels);
      row.alpha = tuned.alpha;
      row.beta = tuned.beta;
      row.gamma = tuned.gamma;
      result.rows[static_cast<std::size_t>(rep) * opts.modes.size() + mi] = std::move(row);
    }
  });

  return result;
}

}  // namespace cogol
