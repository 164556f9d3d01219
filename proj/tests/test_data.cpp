#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "cogol/data.hpp"
#include "cogol/evaluation.hpp"
#include "cogol/optimizer.hpp"

using namespace cogol;
namespace fs = std::filesystem;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / ("cogol_test_" + name);
  std::ofstream out(path);
  out << content;
  return path.string();
}

// best accuracy of any parallel linear threshold model: for each direction
// on a grid, the optimal nondecreasing class assignment along the sorted
// projections (dynamic program over prefixes)
double direction_grid_oracle(const Dataset& d, int angles) {
  const int n = static_cast<int>(d.n());
  double best = 0.0;
  for (int a = 0; a < angles; ++a) {
    const double ang = 2.0 * M_PI * a / angles;
    const Eigen::Vector2d u(std::cos(ang), std::sin(ang));
    std::vector<std::pair<double, int>> proj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      proj[static_cast<std::size_t>(i)] = {u.dot(d.features.row(i)),
                                           d.labels[static_cast<std::size_t>(i)]};
    }
    std::sort(proj.begin(), proj.end());
    std::vector<int> dp(static_cast<std::size_t>(d.k), 0);
    for (int i = 0; i < n; ++i) {
      for (int c = d.k - 1; c >= 0; --c) {
        int base = 0;
        for (int b = 0; b <= c; ++b) base = std::max(base, dp[static_cast<std::size_t>(b)]);
        const int hit = (proj[static_cast<std::size_t>(i)].second == c + 1) ? 1 : 0;
        dp[static_cast<std::size_t>(c)] =
            std::max(dp[static_cast<std::size_t>(c)], base + hit);
      }
    }
    const int matches = *std::max_element(dp.begin(), dp.end());
    best = std::max(best, static_cast<double>(matches) / n);
  }
  return best;
}

}  // namespace

TEST_CASE("csv loader") {
  SUBCASE("header is auto-detected") {
    const auto path = write_temp("header.csv", "f1,f2,label\n1.0,2.0,1\n3.0,4.0,2\n");
    const CsvLoad loaded = load_csv(path);
    CHECK(loaded.had_header);
    CHECK(loaded.dataset.n() == 2);
    CHECK(loaded.dataset.p() == 2);
    CHECK(loaded.dataset.k == 2);
    CHECK(loaded.dataset.features(1, 1) == 4.0);
  }

  SUBCASE("headerless numeric file") {
    const auto path = write_temp("plain.csv", "1.5,2\n-0.5,1\n0.25,3\n");
    const CsvLoad loaded = load_csv(path);
    CHECK(!loaded.had_header);
    CHECK(loaded.dataset.n() == 3);
    CHECK(loaded.dataset.k == 3);
  }

  SUBCASE("parse errors carry file, row and column") {
    const auto path = write_temp("bad.csv", "1.0,2.0,1\n1.0,zzz,2\n");
    try {
      load_csv(path);
      FAIL("expected an InputError");
    } catch (const InputError& e) {
      const std::string msg = e.what();
      CHECK(msg.find(":2:2:") != std::string::npos);
      CHECK(msg.find("zzz") != std::string::npos);
    }
  }

  SUBCASE("non-finite cells are rejected with coordinates") {
    const auto path = write_temp("inf.csv", "1.0,inf,1\n");
    try {
      load_csv(path);
      FAIL("expected an InputError");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(":1:2:") != std::string::npos);
    }
  }

  SUBCASE("empty and missing files") {
    const auto path = write_temp("empty.csv", "");
    CHECK_THROWS_AS(load_csv(path), InputError);
    CHECK_THROWS_AS(load_csv("/nonexistent/nowhere.csv"), InputError);
  }

  SUBCASE("labels must be positive integers") {
    CHECK_THROWS_AS(load_csv(write_temp("neg.csv", "1.0,0\n2.0,1\n")), InputError);
    CHECK_THROWS_AS(load_csv(write_temp("frac.csv", "1.0,1.5\n")), InputError);
  }

  SUBCASE("ragged rows are rejected") {
    CHECK_THROWS_AS(load_csv(write_temp("ragged.csv", "1.0,2.0,1\n1.0,2\n")), InputError);
  }

  SUBCASE("single-class file loads with a degenerate warning") {
    const auto path = write_temp("degenerate.csv", "1.0,2.0,1\n");
    const CsvLoad loaded = load_csv(path);
    CHECK(loaded.dataset.n() == 1);
    CHECK(loaded.dataset.p() == 2);
    CHECK(loaded.dataset.k == 1);
    REQUIRE(loaded.warnings.size() == 1);
    CHECK(loaded.warnings[0].find("degenerate") != std::string::npos);
  }
}

TEST_CASE("csv save/load round trip is bit-stable") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::RotatingBoundaries;
  spec.n = 50;
  spec.k = 4;
  spec.noise_sd = 0.3;
  spec.seed = 5;
  const Dataset d = make_synthetic(spec).data;
  const auto path = write_temp("roundtrip.csv", "");
  save_csv(d, path);
  const CsvLoad loaded = load_csv(path);
  CHECK(loaded.had_header);
  REQUIRE(loaded.dataset.n() == d.n());
  CHECK((loaded.dataset.features - d.features).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(loaded.dataset.labels == d.labels);
}

TEST_CASE("matrix csv loader treats every column as a feature") {
  const auto path = write_temp("matrix.csv", "a,b\n1.0,2.5\n-1.0,0.25\n");
  const Eigen::MatrixXd X = load_matrix_csv(path);
  CHECK(X.rows() == 2);
  CHECK(X.cols() == 2);
  CHECK(X(1, 1) == 0.25);
}

TEST_CASE("standardization") {
  Dataset train;
  train.k = 2;
  train.features.resize(2, 2);
  train.features << 1.0, 5.0, 3.0, 5.0;  // column 2 is constant
  train.labels = {1, 2};

  Dataset apply;
  apply.k = 2;
  apply.features.resize(1, 2);
  apply.features << 2.0, 5.0;  // equals the train means
  apply.labels = {1};

  const Standardized s = standardize(train, {apply});
  CHECK(s.means[0] == 2.0);
  CHECK(s.sds[0] == 1.0);  // population sd of {1, 3}
  CHECK(s.train.features(0, 0) == -1.0);
  CHECK(s.train.features(1, 0) == 1.0);
  CHECK(s.sds[1] == 1.0);  // zero-variance rule: centered only
  CHECK(s.train.features(0, 1) == 0.0);
  CHECK(s.others[0].features(0, 0) == 0.0);
  CHECK(s.others[0].features(0, 1) == 0.0);
}

TEST_CASE("stratified k-fold") {
  SUBCASE("exact divisibility gives one sample per class per fold") {
    Dataset d;
    d.k = 3;
    d.features = Eigen::MatrixXd::Zero(9, 1);
    d.labels = {1, 2, 3, 1, 2, 3, 1, 2, 3};
    const auto folds = stratified_kfold(d, 3, 7);
    REQUIRE(folds.size() == 3);
    for (const auto& [train, valid] : folds) {
      CHECK(valid.size() == 3);
      CHECK(train.size() == 6);
      std::set<int> classes;
      for (int i : valid) classes.insert(d.labels[static_cast<std::size_t>(i)]);
      CHECK(classes.size() == 3);
    }
  }

  SUBCASE("per-class fold counts differ by at most one, folds partition") {
    SyntheticSpec spec;
    spec.kind = SyntheticKind::ParallelBands;
    spec.n = 103;
    spec.k = 4;
    spec.noise_sd = 0.7;
    spec.seed = 3;
    const Dataset d = make_synthetic(spec).data;
    for (int folds_n : {2, 3, 5}) {
      const auto folds = stratified_kfold(d, folds_n, 11);
      std::vector<int> seen(static_cast<std::size_t>(d.n()), 0);
      for (int c = 1; c <= d.k; ++c) {
        std::vector<int> counts;
        for (const auto& [train, valid] : folds) {
          int cnt = 0;
          for (int i : valid) cnt += (d.labels[static_cast<std::size_t>(i)] == c);
          counts.push_back(cnt);
        }
        CHECK(*std::max_element(counts.begin(), counts.end()) -
                  *std::min_element(counts.begin(), counts.end()) <=
              1);
      }
      for (const auto& [train, valid] : folds) {
        for (int i : valid) seen[static_cast<std::size_t>(i)] += 1;
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
  }

  SUBCASE("deterministic in the seed") {
    SyntheticSpec spec;
    spec.kind = SyntheticKind::ParallelBands;
    spec.n = 100;
    spec.k = 3;
    spec.noise_sd = 0.5;
    spec.seed = 9;
    const Dataset d = make_synthetic(spec).data;
    const auto a = stratified_kfold(d, 4, 123);
    const auto b = stratified_kfold(d, 4, 123);
    const auto c = stratified_kfold(d, 4, 124);
    CHECK(a == b);
    CHECK(a != c);
  }

  SUBCASE("input validation") {
    Dataset d;
    d.k = 2;
    d.features = Eigen::MatrixXd::Zero(4, 1);
    d.labels = {1, 2, 1, 2};
    CHECK_THROWS_AS(stratified_kfold(d, 5, 0), std::invalid_argument);  // folds > n
    CHECK_THROWS_AS(stratified_kfold(d, 1, 0), std::invalid_argument);
  }
}

TEST_CASE("split plans partition the dataset") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::ParallelBands;
  spec.n = 97;
  spec.k = 5;
  spec.noise_sd = 0.6;
  spec.seed = 21;
  const Dataset d = make_synthetic(spec).data;

  SplitPlan plan;
  plan.fractions = {0.75, 0.25};
  plan.seed = 17;
  const auto parts = split_indices(d, plan);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() + parts[1].size() == static_cast<std::size_t>(d.n()));
  std::set<int> all(parts[0].begin(), parts[0].end());
  all.insert(parts[1].begin(), parts[1].end());
  CHECK(all.size() == static_cast<std::size_t>(d.n()));

  // stratified: class proportions approximately preserved
  for (int c = 1; c <= d.k; ++c) {
    int total = 0, in_train = 0;
    for (Eigen::Index i = 0; i < d.n(); ++i) total += (d.labels[static_cast<std::size_t>(i)] == c);
    for (int i : parts[0]) in_train += (d.labels[static_cast<std::size_t>(i)] == c);
    CHECK(std::abs(in_train - 0.75 * total) <= 1.0);
  }

  SplitPlan bad;
  bad.fractions = {0.5, 0.6};
  CHECK_THROWS_AS(split_indices(d, bad), std::invalid_argument);
}

TEST_CASE("parallel bands: the generating model is exact without noise") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::ParallelBands;
  spec.n = 300;
  spec.k = 5;
  spec.noise_sd = 0.0;
  spec.seed = 33;
  const SyntheticData synth = make_synthetic(spec);

  OrdinalModel truth;
  truth.weights = synth.true_weights;
  truth.thresholds = synth.true_thresholds;
  truth.mode = Mode::OL;
  CHECK(evaluate(predict(truth, synth.data.features), synth.data.labels).mae == 0.0);
}

TEST_CASE("rotating boundaries: GOL-representable, not OL-representable") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::RotatingBoundaries;
  spec.n = 400;
  spec.k = 5;
  spec.noise_sd = 0.0;
  spec.seed = 35;
  const SyntheticData synth = make_synthetic(spec);

  OrdinalModel truth;
  truth.weights = synth.true_weights;
  truth.thresholds = synth.true_thresholds;
  truth.mode = Mode::GOL;
  CHECK(evaluate(predict(truth, synth.data.features), synth.data.labels).mae == 0.0);

  FitSpec fs;
  fs.mode = Mode::OL;
  fs.pen = {1e-6, 0.0};
  fs.seed = 1;
  const auto [ol_model, report] = fit(synth.data, fs);
  CHECK(evaluate(predict(ol_model, synth.data.features), synth.data.labels).mae > 0.0);
}

TEST_CASE("concentric rings defeat every parallel linear model") {
  SyntheticSpec spec;
  spec.kind = SyntheticKind::ConcentricRings;
  spec.n = 600;
  spec.k = 3;
  spec.noise_sd = 0.02;
  spec.seed = 42;
  const Dataset d = make_synthetic(spec).data;

  double majority = 0.0;
  for (int c = 1; c <= d.k; ++c) {
    int cnt = 0;
    for (int y : d.labels) cnt += (y == c);
    majority = std::max(majority, static_cast<double>(cnt) / d.n());
  }
  const double oracle = direction_grid_oracle(d, 720);
  CHECK(oracle <= majority + 0.1);
}

TEST_CASE("synthetic data regenerates bit-identically") {
  for (SyntheticKind kind : {SyntheticKind::ParallelBands, SyntheticKind::RotatingBoundaries,
                             SyntheticKind::ConcentricRings}) {
    SyntheticSpec spec;
    spec.kind = kind;
    spec.n = 80;
    spec.k = 4;
    spec.noise_sd = 0.4;
    spec.seed = 77;
    const SyntheticData a = make_synthetic(spec);
    const SyntheticData b = make_synthetic(spec);
    CHECK((a.data.features - b.data.features).lpNorm<Eigen::Infinity>() == 0.0);
    CHECK(a.data.labels == b.data.labels);

    spec.seed = 78;
    const SyntheticData c = make_synthetic(spec);
    CHECK((a.data.features - c.data.features).lpNorm<Eigen::Infinity>() != 0.0);
  }
}

TEST_CASE("synthetic spec validation") {
  SyntheticSpec spec;
  spec.k = 1;
  CHECK_THROWS_AS(make_synthetic(spec), std::invalid_argument);
  spec.k = 5;
  spec.n = 3;
  CHECK_THROWS_AS(make_synthetic(spec), std::invalid_argument);
  spec.n = 50;
  spec.noise_sd = -0.5;
  CHECK_THROWS_AS(make_synthetic(spec), std::invalid_argument);
}

TEST_CASE("benchmark catalog lists the 17 standard datasets") {
  const auto& catalog = benchmark_catalog();
  CHECK(catalog.size() == 17);
  const auto era = std::find_if(catalog.begin(), catalog.end(),
                                [](const BenchmarkShape& s) { return s.name == "ERA"; });
  REQUIRE(era != catalog.end());
  CHECK(era->n == 1000);
  CHECK(era->p == 4);
  CHECK(era->k == 9);
  const auto wine =
      std::find_if(catalog.begin(), catalog.end(),
                   [](const BenchmarkShape& s) { return s.name == "winequality-red"; });
  REQUIRE(wine != catalog.end());
  CHECK(wine->n == 1599);
  CHECK(wine->p == 11);
  CHECK(wine->k == 6);
}

TEST_CASE("dataset validation and take") {
  Dataset d;
  d.k = 3;
  d.features = Eigen::MatrixXd::Zero(3, 2);
  d.labels = {1, 3, 2};
  CHECK_NOTHROW(validate(d));

  const Dataset sub = take(d, {2, 0});
  CHECK(sub.n() == 2);
  CHECK(sub.k == 3);  // class metadata preserved
  CHECK(sub.labels == std::vector<int>{2, 1});

  d.labels = {1, 4, 2};
  CHECK_THROWS_AS(validate(d), std::invalid_argument);
  d.labels = {1, 3, 2};
  d.features(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate(d), std::invalid_argument);
}
