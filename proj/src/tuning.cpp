#include "cogol/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cogol/evaluation.hpp"
#include "cogol/rng.hpp"
#include "cogol/threading.hpp"

namespace cogol {

namespace {

double sample_log_uniform(Rng& rng, const std::pair<double, double>& range) {
  const double lo = std::log(range.first);
  const double hi = std::log(range.second);
  return std::exp(rng.uniform(lo, hi));
}

struct TrialParams {
  double alpha;
  double beta;
  std::optional<double> gamma;
};

}  // namespace

TuneResult tune(const Dataset& data, Mode mode, const SearchSpace& space, int folds,
                std::uint64_t seed, int threads) {
  validate(data);
  if (space.trials < 1) throw std::invalid_argument("tune: trials must be >= 1");
  if (!(space.alpha_range.first > 0.0) || !(space.beta_range.first > 0.0)) {
    throw std::invalid_argument("tune: search interval lower bounds must be positive");
  }
  if (space.gamma_range && !(space.gamma_range->first > 0.0)) {
    throw std::invalid_argument("tune: gamma interval lower bound must be positive");
  }

  // one fold plan shared by every trial; trial params pre-sampled in trial
  // order so concurrent execution cannot change the sequence
  const auto fold_plan = stratified_kfold(data, folds, mix_seed(seed, 0xf01d));
  for (const auto& [train_idx, valid_idx] : fold_plan) {
    std::vector<bool> seen(static_cast<std::size_t>(data.n()), false);
    for (int i : train_idx) seen[static_cast<std::size_t>(i)] = true;
    for (int i : valid_idx) {
      if (seen[static_cast<std::size_t>(i)]) {
        throw std::logic_error("tune: fold train/validation overlap");
      }
      seen[static_cast<std::size_t>(i)] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
      throw std::logic_error("tune: folds do not cover the dataset");
    }
  }

  Rng rng(mix_seed(seed, 0x7e1a15));
  std::vector<TrialParams> params(static_cast<std::size_t>(space.trials));
  for (auto& tp : params) {
    tp.alpha = sample_log_uniform(rng, space.alpha_range);
    tp.beta = sample_log_uniform(rng, space.beta_range);
    if (space.gamma_range) tp.gamma = sample_log_uniform(rng, *space.gamma_range);
  }

  std::vector<TrialResult> table(static_cast<std::size_t>(space.trials));
  parallel_for(space.trials, threads, [&](int t) {
    TrialResult row;
    row.trial = t;
    row.alpha = params[static_cast<std::size_t>(t)].alpha;
    row.beta = params[static_cast<std::size_t>(t)].beta;
    row.gamma = params[static_cast<std::size_t>(t)].gamma;
    try {
      double mae = 0.0, mse = 0.0, acc = 0.0;
      for (std::size_t f = 0; f < fold_plan.size(); ++f) {
        const Dataset train_d = take(data, fold_plan[f].first);
        const Dataset valid_d = take(data, fold_plan[f].second);
        const Standardized std_d = standardize(train_d, {valid_d});

        FitSpec fspec;
        fspec.mode = mode;
        fspec.pen = {row.alpha, row.beta};
        fspec.seed = mix_seed(seed, 0x5eedULL + 1000 * static_cast<std::uint64_t>(t) +
                                        static_cast<std::uint64_t>(f));
        std::vector<int> preds;
        if (row.gamma) {
          KernelSpec kspec;
          kspec.kind = KernelKind::RBF;
          kspec.gamma = *row.gamma;
          const auto [model, rep] = fit_kernel(std_d.train, fspec, kspec);
          preds = predict(model, std_d.others[0].features);
        } else {
          const auto [model, rep] = fit(std_d.train, fspec);
          preds = predict(model, std_d.others[0].features);
        }
        const EvalReport ev = evaluate(preds, valid_d.labels);
        mae += ev.mae;
        mse += ev.mse;
        acc += ev.accuracy;
      }
      const double nf = static_cast<double>(fold_plan.size());
      row.cv_mae = mae / nf;
      row.cv_mse = mse / nf;
      row.cv_acc = acc / nf;
      row.status = "ok";
    } catch (const std::exception& e) {
      row.cv_mae = std::numeric_limits<double>::infinity();
      row.cv_mse = std::numeric_limits<double>::infinity();
      row.cv_acc = 0.0;
      row.status = std::string("error: ") + e.what();
    }
    table[static_cast<std::size_t>(t)] = std::move(row);
  });

  // argmin CV-MAE; ties prefer the larger beta (the more constrained model)
  int best = 0;
  for (int t = 1; t < space.trials; ++t) {
    const auto& cand = table[static_cast<std::size_t>(t)];
    const auto& cur = table[static_cast<std::size_t>(best)];
    if (cand.cv_mae < cur.cv_mae ||
        (cand.cv_mae == cur.cv_mae && cand.beta > cur.beta)) {
      best = t;
    }
  }

  TuneResult out;
  out.alpha = table[static_cast<std::size_t>(best)].alpha;
  out.beta = table[static_cast<std::size_t>(best)].beta;
  out.gamma = table[static_cast<std::size_t>(best)].gamma;
  out.cv_mae = table[static_cast<std::size_t>(best)].cv_mae;
  out.best_trial = best;
  out.table = std::move(table);
  return out;
}

std::string trial_table_csv(const std::vector<TrialResult>& table) {
  std::ostringstream os;
  os.precision(17);
  os << "trial,alpha,beta,gamma,cv_mae,cv_mse,cv_acc,status\n";
  for (const auto& row : table) {
    os << row.trial << "," << row.alpha << "," << row.beta << ",";
    if (row.gamma) os << *row.gamma;
    os << "," << row.cv_mae << "," << row.cv_mse << "," << row.cv_acc << ",\"" << row.status
       << "\"\n";
  }
  return os.str();
}

}  // namespace cogol
