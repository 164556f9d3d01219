#pragma once

#include <vector>

namespace cogol {

struct EvalReport {
  double mae = 0.0;
  double mse = 0.0;
  double accuracy = 0.0;
  int n = 0;
};

/// MAE, MSE and exact-match accuracy of ordinal predictions.
EvalReport evaluate(const std::vector<int>& preds, const std::vector<int>& labels);

struct WilcoxonResult {
  double statistic = 0.0;  // min(W+, W-)
  double p_value = 1.0;    // two-sided
  double w_plus = 0.0;
  double w_minus = 0.0;
  int n_effective = 0;     // pairs left after dropping zero differences
  bool degenerate = false; // all differences zero
  bool exact = false;      // enumeration branch used
};

enum class WilcoxonMethod { Auto, Exact, NormalApprox };

/// Paired two-sided Wilcoxon signed-rank test on a - b. Zero differences
/// are dropped, ties are mid-ranked. Auto uses exact enumeration of all
/// 2^n sign assignments when n_effective <= 20 and a normal approximation
/// with tie and continuity corrections otherwise; Exact/NormalApprox force
/// a branch (Exact requires n_effective <= 25).
WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a,
                                    const std::vector<double>& b,
                                    WilcoxonMethod method = WilcoxonMethod::Auto);

}  // namespace cogol
