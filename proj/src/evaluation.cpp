#include "cogol/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cogol {

EvalReport evaluate(const std::vector<int>& preds, const std::vector<int>& labels) {
  if (preds.size() != labels.size()) {
    throw std::invalid_argument("evaluate: expected " + std::to_string(labels.size()) +
                                " predictions, got " + std::to_string(preds.size()));
  }
  if (preds.empty()) throw std::invalid_argument("evaluate: empty input");

  EvalReport rep;
  rep.n = static_cast<int>(preds.size());
  double abs_sum = 0.0, sq_sum = 0.0;
  int hits = 0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const double d = static_cast<double>(preds[i]) - static_cast<double>(labels[i]);
    abs_sum += std::abs(d);
    sq_sum += d * d;
    if (preds[i] == labels[i]) ++hits;
  }
  rep.mae = abs_sum / rep.n;
  rep.mse = sq_sum / rep.n;
  rep.accuracy = static_cast<double>(hits) / rep.n;
  return rep;
}

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b,
                                    WilcoxonMethod method) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("wilcoxon: expected equal lengths, got " +
                                std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  if (a.empty()) throw std::invalid_argument("wilcoxon: empty input");

  // drop zero differences, then rank |d| with mid-ranks for ties
  std::vector<double> diffs;
  diffs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d != 0.0) diffs.push_back(d);
  }

  WilcoxonResult res;
  res.n_effective = static_cast<int>(diffs.size());
  if (diffs.empty()) {
    res.degenerate = true;
    res.p_value = 1.0;
    return res;
  }

  const std::size_t n = diffs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::abs(diffs[i]) < std::abs(diffs[j]);
  });

  std::vector<double> ranks(n);
  std::vector<std::size_t> tie_sizes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && std::abs(diffs[order[j + 1]]) == std::abs(diffs[order[i]])) ++j;
    const double mid = 0.5 * static_cast<double>(i + 1 + j + 1);
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = mid;
    tie_sizes.push_back(j - i + 1);
    i = j + 1;
  }

  double w_plus = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (diffs[i] > 0.0) w_plus += ranks[i];
  }
  const double total = static_cast<double>(n) * static_cast<double>(n + 1) / 2.0;
  res.w_plus = w_plus;
  res.w_minus = total - w_plus;
  res.statistic = std::min(res.w_plus, res.w_minus);

  const bool use_exact = (method == WilcoxonMethod::Auto) ? (n <= 20)
                                                          : (method == WilcoxonMethod::Exact);
  if (use_exact && n > 25) {
    throw std::invalid_argument("wilcoxon: exact enumeration limited to 25 effective pairs");
  }
  if (use_exact) {
    // exact: count all 2^n sign assignments by their doubled rank sum
    // (mid-ranks are half-integers, so doubled sums are integers)
    res.exact = true;
    const int S = static_cast<int>(std::llround(2.0 * total));
    std::vector<double> counts(static_cast<std::size_t>(S) + 1, 0.0);
    counts[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const int w = static_cast<int>(std::llround(2.0 * ranks[i]));
      for (int s = S - w; s >= 0; --s) {
        if (counts[static_cast<std::size_t>(s)] != 0.0) {
          counts[static_cast<std::size_t>(s + w)] += counts[static_cast<std::size_t>(s)];
        }
      }
    }
    const int observed = static_cast<int>(std::llround(2.0 * w_plus));
    double cnt_le = 0.0, cnt_ge = 0.0;
    for (int s = 0; s <= S; ++s) {
      if (s <= observed) cnt_le += counts[static_cast<std::size_t>(s)];
      if (s >= observed) cnt_ge += counts[static_cast<std::size_t>(s)];
    }
    const double denom = std::ldexp(1.0, static_cast<int>(n));  // 2^n
    res.p_value = std::min(1.0, 2.0 * std::min(cnt_le, cnt_ge) / denom);
  } else {
    // normal approximation with tie and continuity corrections
    const double nd = static_cast<double>(n);
    const double mean = nd * (nd + 1.0) / 4.0;
    double var = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0;
    for (std::size_t t : tie_sizes) {
      const double td = static_cast<double>(t);
      var -= (td * td * td - td) / 48.0;
    }
    if (var <= 0.0) {
      res.p_value = 1.0;
    } else {
      const double dev = w_plus - mean;
      const double cc = (dev > 0.0) ? -0.5 : (dev < 0.0 ? 0.5 : 0.0);
      const double z = (dev + cc) / std::sqrt(var);
      res.p_value = std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
    }
  }
  if (res.p_value <= 0.0) res.p_value = std::numeric_limits<double>::min();
  return res;
}

}  // namespace cogol
