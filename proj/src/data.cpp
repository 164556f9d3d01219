#include "cogol/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <system_error>

#include "cogol/rng.hpp"

namespace cogol {

std::string to_string(SyntheticKind kind) {
  switch (kind) {
    case SyntheticKind::ParallelBands: return "parallel-bands";
    case SyntheticKind::RotatingBoundaries: return "rotating-boundaries";
    case SyntheticKind::ConcentricRings: return "concentric-rings";
  }
  return "parallel-bands";
}

SyntheticKind synthetic_kind_from_string(const std::string& s) {
  if (s == "parallel-bands") return SyntheticKind::ParallelBands;
  if (s == "rotating-boundaries") return SyntheticKind::RotatingBoundaries;
  if (s == "concentric-rings") return SyntheticKind::ConcentricRings;
  throw std::invalid_argument("unknown synthetic kind '" + s +
                              "' (expected parallel-bands, rotating-boundaries or "
                              "concentric-rings)");
}

namespace {

bool parse_double(const std::string& field, double& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (*(end - 1) == ' ' || *(end - 1) == '\t')) --end;
  if (begin == end) return false;
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

namespace {

struct RawCsv {
  std::vector<std::vector<double>> rows;
  bool had_header = false;
};

RawCsv read_numeric_csv(const std::string& path, std::size_t min_width) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");

  RawCsv out;
  std::string line;
  std::size_t lineno = 0;
  std::size_t width = 0;
  bool first_content_line = true;

  while (std::getline(in, line)) {
    ++lineno;
    bool blank = true;
    for (char ch : line) {
      if (ch != ' ' && ch != '\t' && ch != '\r') { blank = false; break; }
    }
    if (blank) continue;

    const auto fields = split_fields(line);
    std::vector<double> values(fields.size());
    bool numeric = true;
    std::size_t bad_col = 0;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (!parse_double(fields[c], values[c])) {
        numeric = false;
        bad_col = c;
        break;
      }
    }

    if (first_content_line) {
      first_content_line = false;
      if (!numeric) {  // header row
        out.had_header = true;
        continue;
      }
    } else if (!numeric) {
      throw InputError(path + ":" + std::to_string(lineno) + ":" + std::to_string(bad_col + 1) +
                       ": cannot parse '" + fields[bad_col] + "' as a number");
    }

    for (std::size_t c = 0; c < values.size(); ++c) {
      if (!std::isfinite(values[c])) {
        throw InputError(path + ":" + std::to_string(lineno) + ":" + std::to_string(c + 1) +
                         ": non-finite value");
      }
    }
    if (out.rows.empty()) {
      width = values.size();
      if (width < min_width) {
        throw InputError(path + ":" + std::to_string(lineno) + ": need at least " +
                         std::to_string(min_width) + " columns");
      }
    } else if (values.size() != width) {
      throw InputError(path + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(width) + " fields, got " + std::to_string(values.size()));
    }
    out.rows.push_back(std::move(values));
  }

  if (out.rows.empty()) throw InputError("empty file '" + path + "'");
  return out;
}

}  // namespace

CsvLoad load_csv(const std::string& path) {
  RawCsv raw = read_numeric_csv(path, 2);
  CsvLoad out;
  out.had_header = raw.had_header;
  auto& rows = raw.rows;
  const std::size_t width = rows.front().size();

  const std::size_t n = rows.size();
  const std::size_t p = width - 1;
  Dataset& d = out.dataset;
  d.features.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  d.labels.resize(n);
  int kmax = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < p; ++c) {
      d.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
    }
    const double raw_label = rows[i][p];
    if (raw_label != std::floor(raw_label)) {
      throw InputError(path + ": row " + std::to_string(i + 1) + ": label " +
                       format_double(raw_label) + " is not an integer");
    }
    const int y = static_cast<int>(raw_label);
    if (y < 1) {
      throw InputError(path + ": row " + std::to_string(i + 1) + ": label " + std::to_string(y) +
                       " not in 1..k (labels must be positive)");
    }
    d.labels[i] = y;
    kmax = std::max(kmax, y);
  }
  d.k = kmax;
  if (kmax < 2) {
    out.warnings.push_back("degenerate labels: only class " + std::to_string(kmax) +
                           " present; the dataset cannot be fit");
  }
  return out;
}

Eigen::MatrixXd load_matrix_csv(const std::string& path) {
  RawCsv raw = read_numeric_csv(path, 1);
  const std::size_t n = raw.rows.size();
  const std::size_t p = raw.rows.front().size();
  Eigen::MatrixXd X(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < p; ++c) {
      X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = raw.rows[i][c];
    }
  }
  return X;
}

void save_csv(const Dataset& data, const std::string& path) {
  std::ofstream outf(path);
  if (!outf) throw InputError("cannot write file '" + path + "'");
  for (Eigen::Index c = 0; c < data.p(); ++c) outf << "f" << (c + 1) << ",";
  outf << "label\n";
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    for (Eigen::Index c = 0; c < data.p(); ++c) {
      outf << format_double(data.features(i, c)) << ",";
    }
    outf << data.labels[static_cast<std::size_t>(i)] << "\n";
  }
}

Standardized standardize(const Dataset& train, const std::vector<Dataset>& apply_to) {
  if (train.n() < 1) throw std::invalid_argument("standardize: empty training set");
  const Eigen::Index p = train.p();
  Standardized out;
  out.means = train.features.colwise().mean();
  out.sds.resize(p);
  for (Eigen::Index c = 0; c < p; ++c) {
    const double var =
        (train.features.col(c).array() - out.means[c]).square().sum() /
        static_cast<double>(train.n());
    const double sd = std::sqrt(var);
    // zero-variance columns are centered only
    out.sds[c] = (sd <= 1e-12 * std::max(1.0, std::abs(out.means[c]))) ? 1.0 : sd;
  }

  auto apply = [&](const Dataset& d) {
    Dataset scaled = d;
    scaled.features.rowwise() -= out.means.transpose();
    scaled.features.array().rowwise() /= out.sds.transpose().array();
    return scaled;
  };
  out.train = apply(train);
  out.others.reserve(apply_to.size());
  for (const auto& d : apply_to) {
    if (d.p() != p) {
      throw std::invalid_argument("standardize: expected " + std::to_string(p) +
                                  " feature columns, got " + std::to_string(d.p()));
    }
    out.others.push_back(apply(d));
  }
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> stratified_kfold(
    const Dataset& data, int folds, std::uint64_t seed) {
  if (folds < 2) throw std::invalid_argument("stratified_kfold: need folds >= 2");
  if (folds > data.n()) {
    throw std::invalid_argument("stratified_kfold: folds (" + std::to_string(folds) +
                                ") > n (" + std::to_string(data.n()) + ")");
  }

  std::vector<std::vector<int>> fold_members(static_cast<std::size_t>(folds));
  Rng rng(seed);
  for (int c = 1; c <= data.k; ++c) {
    std::vector<int> idx;
    for (Eigen::Index i = 0; i < data.n(); ++i) {
      if (data.labels[static_cast<std::size_t>(i)] == c) idx.push_back(static_cast<int>(i));
    }
    if (idx.empty()) continue;
    rng.shuffle(idx);
    const std::size_t offset = rng.integer(static_cast<std::uint64_t>(folds));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      fold_members[(offset + i) % static_cast<std::size_t>(folds)].push_back(idx[i]);
    }
  }

  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  out.reserve(static_cast<std::size_t>(folds));
  for (int f = 0; f < folds; ++f) {
    std::vector<int> valid = fold_members[static_cast<std::size_t>(f)];
    std::vector<int> train;
    for (int g = 0; g < folds; ++g) {
      if (g == f) continue;
      train.insert(train.end(), fold_members[static_cast<std::size_t>(g)].begin(),
                   fold_members[static_cast<std::size_t>(g)].end());
    }
    std::sort(valid.begin(), valid.end());
    std::sort(train.begin(), train.end());
    out.emplace_back(std::move(train), std::move(valid));
  }
  return out;
}

namespace {

// largest-remainder allocation of m items to the given fractions
std::vector<std::size_t> allocate_counts(std::size_t m, const std::vector<double>& fractions) {
  std::vector<std::size_t> counts(fractions.size());
  std::vector<std::pair<double, std::size_t>> rema;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    const double exact = fractions[i] * static_cast<double>(m);
    counts[i] = static_cast<std::size_t>(std::floor(exact));
    assigned += counts[i];
    rema.emplace_back(exact - std::floor(exact), i);
  }
  std::sort(rema.begin(), rema.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (std::size_t r = 0; assigned < m; ++r, ++assigned) {
    counts[rema[r % rema.size()].second] += 1;
  }
  return counts;
}

}  // namespace

std::vector<std::vector<int>> split_indices(const Dataset& data, const SplitPlan& plan) {
  if (plan.fractions.empty()) throw std::invalid_argument("split: no fractions given");
  double sum = 0.0;
  for (double f : plan.fractions) {
    if (!(f > 0.0 && f < 1.0)) {
      throw std::invalid_argument("split: fractions must lie in (0, 1)");
    }
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("split: fractions must sum to 1");
  }

  const std::size_t parts = plan.fractions.size();
  std::vector<std::vector<int>> out(parts);
  Rng rng(plan.seed);

  if (plan.stratified) {
    for (int c = 1; c <= data.k; ++c) {
      std::vector<int> idx;
      for (Eigen::Index i = 0; i < data.n(); ++i) {
        if (data.labels[static_cast<std::size_t>(i)] == c) idx.push_back(static_cast<int>(i));
      }
      if (idx.empty()) continue;
      rng.shuffle(idx);
      const auto counts = allocate_counts(idx.size(), plan.fractions);
      std::size_t pos = 0;
      for (std::size_t part = 0; part < parts; ++part) {
        for (std::size_t j = 0; j < counts[part]; ++j) out[part].push_back(idx[pos++]);
      }
    }
  } else {
    std::vector<int> idx(static_cast<std::size_t>(data.n()));
    std::iota(idx.begin(), idx.end(), 0);
    rng.shuffle(idx);
    const auto counts = allocate_counts(idx.size(), plan.fractions);
    std::size_t pos = 0;
    for (std::size_t part = 0; part < parts; ++part) {
      for (std::size_t j = 0; j < counts[part]; ++j) out[part].push_back(idx[pos++]);
    }
  }
  for (auto& part : out) std::sort(part.begin(), part.end());
  return out;
}

namespace {

constexpr double kBandMargin = 0.05;       // noiseless scores keep this margin
constexpr double kBandTailShare = 0.07;    // tail band mass; inner bands split the rest
constexpr double kRotationSpanDeg = 30.0;  // total arc for rotating boundaries
constexpr double kRingInner = 4.0;         // first band center radius
constexpr double kRingStep = 0.25;         // band center spacing
constexpr double kRingHalfWidth = 0.10;    // radial band half-width
constexpr double kRingInnerShare = 0.45;   // innermost band holds the majority

// standard normal quantile by bisecting the CDF; an Acklam-style rational
// approximation would be overkill here
double normal_quantile(double q) {
  double lo = -8.0, hi = 8.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double cdf = 0.5 * std::erfc(-mid / std::sqrt(2.0));
    (cdf < q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// thresholds at the score quantiles so classes come out balanced for
// x ~ N(0, I)
Eigen::VectorXd balanced_thresholds(int k) {
  Eigen::VectorXd theta(k - 1);
  for (int j = 1; j < k; ++j) {
    theta[j - 1] = normal_quantile(static_cast<double>(j) / static_cast<double>(k));
  }
  return theta;
}

// thin tail bands, evenly split inner bands
Eigen::VectorXd tailed_thresholds(int k) {
  if (k == 2) return balanced_thresholds(k);
  Eigen::VectorXd theta(k - 1);
  const double inner = (1.0 - 2.0 * kBandTailShare) / static_cast<double>(k - 2);
  double cum = kBandTailShare;
  for (int j = 0; j < k - 1; ++j) {
    theta[j] = normal_quantile(cum);
    cum += inner;
  }
  return theta;
}

SyntheticData make_parallel_bands(const SyntheticSpec& spec) {
  SyntheticData out;
  const int k = spec.k;
  const Eigen::VectorXd theta = tailed_thresholds(k);
  const double angle = M_PI / 6.0;
  Eigen::Vector2d w(std::cos(angle), std::sin(angle));

  Rng rng(spec.seed);
  out.data.k = k;
  out.data.features.resize(spec.n, 2);
  out.data.labels.resize(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    Eigen::Vector2d x;
    double score = 0.0;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      x << rng.normal(), rng.normal();
      score = w.dot(x);
      double margin = 1e300;
      for (int j = 0; j < k - 1; ++j) margin = std::min(margin, std::abs(score - theta[j]));
      if (margin >= kBandMargin) break;
    }
    int y = 1;
    for (int j = 0; j < k - 1; ++j) {
      if (score > theta[j]) ++y;
    }
    // ordinal label noise: rounded gaussian jumps, clipped to 1..k
    if (spec.noise_sd > 0.0) {
      y += static_cast<int>(std::lround(rng.normal(0.0, spec.noise_sd)));
      y = std::clamp(y, 1, k);
    }
    out.data.features.row(i) = x.transpose();
    out.data.labels[static_cast<std::size_t>(i)] = y;
  }
  out.true_weights = w.transpose().replicate(k - 1, 1);
  out.true_thresholds = theta;
  return out;
}

SyntheticData make_rotating_boundaries(const SyntheticSpec& spec) {
  SyntheticData out;
  const int k = spec.k;
  const Eigen::VectorXd theta = balanced_thresholds(k);
  const double span = kRotationSpanDeg * M_PI / 180.0;
  const double base = M_PI / 6.0 - span / 2.0;
  const double step = (k > 2) ? span / static_cast<double>(k - 2) : 0.0;

  Eigen::MatrixXd W(k - 1, 2);
  for (int j = 0; j < k - 1; ++j) {
    const double a = base + step * static_cast<double>(j);
    W(j, 0) = std::cos(a);
    W(j, 1) = std::sin(a);
  }

  Rng rng(spec.seed);
  out.data.k = k;
  out.data.features.resize(spec.n, 2);
  out.data.labels.resize(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    Eigen::Vector2d x;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      x << rng.normal(), rng.normal();
      double margin = 1e300;
      for (int j = 0; j < k - 1; ++j) {
        margin = std::min(margin, std::abs(W.row(j).dot(x) - theta[j]));
      }
      if (margin >= kBandMargin) break;
    }
    // labels count crossed hyperplanes, each with its own noisy score
    int crossed = 0;
    for (int j = 0; j < k - 1; ++j) {
      const double s =
          W.row(j).dot(x) + (spec.noise_sd > 0.0 ? rng.normal(0.0, spec.noise_sd) : 0.0);
      if (s > theta[j]) ++crossed;
    }
    out.data.features.row(i) = x.transpose();
    out.data.labels[static_cast<std::size_t>(i)] = 1 + crossed;
  }
  out.true_weights = W;
  out.true_thresholds = theta;
  return out;
}

SyntheticData make_concentric_rings(const SyntheticSpec& spec) {
  SyntheticData out;
  const int k = spec.k;
  Rng rng(spec.seed);
  out.data.k = k;
  out.data.features.resize(spec.n, 2);
  out.data.labels.resize(static_cast<std::size_t>(spec.n));
  out.ring_radii.resize(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    out.ring_radii[static_cast<std::size_t>(c)] = kRingInner + kRingStep * c;
  }

  // the inner band carries kRingInnerShare of the samples, the rest split
  // the remainder evenly
  std::vector<double> shares(static_cast<std::size_t>(k),
                             (1.0 - kRingInnerShare) / static_cast<double>(k - 1));
  shares[0] = kRingInnerShare;
  std::vector<int> band(static_cast<std::size_t>(spec.n));
  {
    std::size_t pos = 0;
    for (int c = 0; c < k; ++c) {
      std::size_t cnt = static_cast<std::size_t>(
          std::floor(shares[static_cast<std::size_t>(c)] * spec.n));
      if (c == 0) cnt = std::max<std::size_t>(cnt, 1);
      for (std::size_t j = 0; j < cnt && pos < band.size(); ++j) band[pos++] = c;
    }
    int c = 0;
    while (pos < band.size()) band[pos++] = c++ % k;  // remainder round-robin
    rng.shuffle(band);
  }

  for (int i = 0; i < spec.n; ++i) {
    const int c = band[static_cast<std::size_t>(i)];
    const double rc = out.ring_radii[static_cast<std::size_t>(c)];
    const double r = rng.uniform(rc - kRingHalfWidth, rc + kRingHalfWidth);
    const double a = rng.uniform(0.0, 2.0 * M_PI);
    Eigen::Vector2d x(r * std::cos(a), r * std::sin(a));
    if (spec.noise_sd > 0.0) {
      x[0] += rng.normal(0.0, spec.noise_sd);
      x[1] += rng.normal(0.0, spec.noise_sd);
    }
    out.data.features.row(i) = x.transpose();
    out.data.labels[static_cast<std::size_t>(i)] = c + 1;
  }
  return out;
}

}  // namespace

SyntheticData make_synthetic(const SyntheticSpec& spec) {
  if (spec.k < 2) throw std::invalid_argument("make_synthetic: need k >= 2");
  if (spec.n < spec.k) throw std::invalid_argument("make_synthetic: need n >= k");
  if (spec.noise_sd < 0.0) throw std::invalid_argument("make_synthetic: noise_sd must be >= 0");

  SyntheticData out;
  switch (spec.kind) {
    case SyntheticKind::ParallelBands: out = make_parallel_bands(spec); break;
    case SyntheticKind::RotatingBoundaries: out = make_rotating_boundaries(spec); break;
    case SyntheticKind::ConcentricRings: out = make_concentric_rings(spec); break;
  }

  std::ostringstream desc;
  desc << "kind = " << to_string(spec.kind) << "\n"
       << "n = " << spec.n << "\nk = " << spec.k << "\nnoise_sd = " << spec.noise_sd
       << "\nseed = " << spec.seed << "\n";
  if (out.true_weights.size() > 0) {
    desc << "true_weights =";
    for (Eigen::Index j = 0; j < out.true_weights.rows(); ++j) {
      desc << " (" << out.true_weights(j, 0) << ", " << out.true_weights(j, 1) << ")";
    }
    desc << "\ntrue_thresholds =";
    for (Eigen::Index j = 0; j < out.true_thresholds.size(); ++j) {
      desc << " " << out.true_thresholds[j];
    }
    desc << "\n";
  }
  if (!out.ring_radii.empty()) {
    desc << "ring_radii =";
    for (double r : out.ring_radii) desc << " " << r;
    desc << "\nring_half_width = " << kRingHalfWidth << "\n";
  }
  out.params_text = desc.str();
  return out;
}

const std::vector<BenchmarkShape>& benchmark_catalog() {
  static const std::vector<BenchmarkShape> catalog = {
      {"ERA", 1000, 4, 9},         {"ESL", 488, 4, 9},
      {"LEV", 1000, 4, 5},         {"SWD", 1000, 10, 4},
      {"automobile", 205, 71, 6},  {"balance-scale", 625, 4, 3},
      {"bondrate", 57, 37, 5},     {"car", 1728, 21, 4},
      {"contact-lenses", 24, 6, 3}, {"eucalyptus", 736, 91, 5},
      {"newthyroid", 215, 5, 3},   {"pasture", 36, 25, 3},
      {"squash-stored", 52, 51, 3}, {"squash-unstored", 52, 52, 3},
      {"tae", 151, 54, 3},         {"toy", 300, 2, 5},
      {"winequality-red", 1599, 11, 6},
  };
  return catalog;
}

}  // namespace cogol
