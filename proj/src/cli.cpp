#include "cogol/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cogol/benchmark.hpp"
#include "cogol/data.hpp"
#include "cogol/serialize.hpp"

namespace cogol {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kToolVersion = "cogol 1.0.0";

void write_manifest(const std::string& path, const std::string& command, const json& params,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs, double wall_seconds) {
  json doc;
  doc["tool_version"] = kToolVersion;
  doc["command"] = command;
  doc["params"] = params;
  doc["inputs"] = inputs;
  doc["outputs"] = outputs;
  doc["wall_time_seconds"] = wall_seconds;
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file '" + path + "'");
  out << doc.dump(2) << "\n";
}

Dataset load_for_fit(const std::string& path) {
  CsvLoad loaded = load_csv(path);
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  validate(loaded.dataset);
  return std::move(loaded.dataset);
}

void print_fit_report(const FitReport& rep) {
  std::printf("final objective  %.10g\n", rep.final_objective);
  std::printf("iterations       %d\n", rep.iterations);
  std::printf("converged        %s\n", rep.converged ? "true" : "false");
  std::printf("grad_inf_norm    %.3e\n", rep.grad_norm);
  std::printf("wall time        %.3f s\n", rep.wall_time);
}

struct TrainArgs {
  std::string data;
  std::string out;
  std::string mode = "cogol";
  double alpha = 1e-6;
  double beta = 0.0;
  std::string kernel;  // empty = primal linear model
  double gamma = 0.0;  // 0 = heuristic midpoint when kernel = rbf
  std::uint64_t seed = 0;
  int max_iters = 5000;
  double grad_tol = 1e-6;
  bool trace = false;
};

int cmd_train(const TrainArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const Dataset data = load_for_fit(args.data);

  FitSpec spec;
  spec.mode = mode_from_string(args.mode);
  spec.pen = {args.alpha, args.beta};
  spec.seed = args.seed;
  spec.max_iters = args.max_iters;
  spec.grad_tol = args.grad_tol;
  if (args.trace) spec.trace = &std::cerr;

  AnyModel model;
  FitReport report;
  double gamma_used = 0.0;
  if (!args.kernel.empty()) {
    KernelSpec kspec;
    kspec.kind = kernel_kind_from_string(args.kernel);
    if (kspec.kind == KernelKind::RBF) {
      if (args.gamma > 0.0) {
        kspec.gamma = args.gamma;
      } else {
        const auto [lo, hi] = gamma_range(data.features, data.k);
        kspec.gamma = std::sqrt(lo * hi);  // geometric midpoint of the heuristic range
        std::printf("gamma heuristic  %.6g (range %.6g .. %.6g)\n", kspec.gamma, lo, hi);
      }
      gamma_used = kspec.gamma;
    }
    auto [m, r] = fit_kernel(data, spec, kspec);
    model = std::move(m);
    report = r;
  } else {
    auto [m, r] = fit(data, spec);
    model = std::move(m);
    report = r;
  }

  save_model(model, args.out);
  print_fit_report(report);
  std::printf("model written    %s\n", args.out.c_str());

  json params{{"mode", args.mode}, {"alpha", args.alpha},
              {"beta", std::isfinite(args.beta) ? json(args.beta) : json("inf")},
              {"seed", args.seed}, {"max_iters", args.max_iters}, {"grad_tol", args.grad_tol}};
  if (!args.kernel.empty()) {
    params["kernel"] = args.kernel;
    params["gamma"] = gamma_used;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(args.out + ".manifest.json", "train", params, {args.data}, {args.out}, wall);
  return 0;
}

struct PredictArgs {
  std::string model;
  std::string data;
  std::string out;
  bool no_labels = false;
  std::string grid;  // optional decision-boundary grid CSV (2-D models)
  int grid_steps = 200;
};

int cmd_predict(const PredictArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const AnyModel model = load_model(args.model);

  Eigen::MatrixXd X;
  std::vector<int> labels;
  if (args.no_labels) {
    X = load_matrix_csv(args.data);
  } else {
    CsvLoad loaded = load_csv(args.data);
    X = loaded.dataset.features;
    labels = loaded.dataset.labels;
  }
  if (X.cols() != feature_dim(model)) {
    throw InputError("predict: model expects " + std::to_string(feature_dim(model)) +
                     " features, data has " + std::to_string(X.cols()));
  }

  const std::vector<int> preds = predict_any(model, X);
  {
    std::ofstream out(args.out);
    if (!out) throw InputError("cannot write file '" + args.out + "'");
    out << "prediction\n";
    for (int y : preds) out << y << "\n";
  }
  std::printf("predictions written %s (%zu rows)\n", args.out.c_str(), preds.size());

  if (!labels.empty()) {
    const EvalReport rep = evaluate(preds, labels);
    std::printf("mae %.6f  mse %.6f  acc %.6f  (n=%d)\n", rep.mae, rep.mse, rep.accuracy, rep.n);
  }

  std::vector<std::string> outputs{args.out};
  if (!args.grid.empty()) {
    if (feature_dim(model) != 2) {
      throw InputError("predict: --grid requires a 2-feature model");
    }
    const double x1lo = X.col(0).minCoeff(), x1hi = X.col(0).maxCoeff();
    const double x2lo = X.col(1).minCoeff(), x2hi = X.col(1).maxCoeff();
    const double pad1 = 0.1 * (x1hi - x1lo + 1e-12), pad2 = 0.1 * (x2hi - x2lo + 1e-12);
    const int steps = std::max(2, args.grid_steps);
    Eigen::MatrixXd pts(static_cast<Eigen::Index>(steps) * steps, 2);
    Eigen::Index r = 0;
    for (int i = 0; i < steps; ++i) {
      for (int j = 0; j < steps; ++j) {
        pts(r, 0) = x1lo - pad1 + (x1hi - x1lo + 2 * pad1) * i / (steps - 1);
        pts(r, 1) = x2lo - pad2 + (x2hi - x2lo + 2 * pad2) * j / (steps - 1);
        ++r;
      }
    }
    const std::vector<int> grid_preds = predict_any(model, pts);
    std::ofstream out(args.grid);
    if (!out) throw InputError("cannot write file '" + args.grid + "'");
    out.precision(17);
    out << "x1,x2,class\n";
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
      out << pts(i, 0) << "," << pts(i, 1) << "," << grid_preds[static_cast<std::size_t>(i)]
          << "\n";
    }
    std::printf("decision grid written %s\n", args.grid.c_str());
    outputs.push_back(args.grid);
  }

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(args.out + ".manifest.json", "predict",
                 json{{"model", args.model}, {"no_labels", args.no_labels}},
                 {args.model, args.data}, outputs, wall);
  return 0;
}

struct TuneArgs {
  std::string data;
  std::string out;
  std::string mode = "cogol";
  std::string kernel;
  int trials = 0;  // 0 = default 30 linear / 40 kernel
  int folds = 3;
  std::uint64_t seed = 0;
};

int cmd_tune(const TuneArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const Dataset data = load_for_fit(args.data);

  SearchSpace space;
  space.trials = args.trials > 0 ? args.trials : (args.kernel.empty() ? 30 : 40);
  if (!args.kernel.empty()) {
    if (kernel_kind_from_string(args.kernel) != KernelKind::RBF) {
      throw InputError("tune: only the rbf kernel is tuned (linear has no gamma)");
    }
    space.gamma_range = gamma_range(data.features, data.k);
  }

  const TuneResult result = tune(data, mode_from_string(args.mode), space, args.folds, args.seed);

  std::printf("best trial %d: alpha %.6g beta %.6g", result.best_trial, result.alpha, result.beta);
  if (result.gamma) std::printf(" gamma %.6g", *result.gamma);
  std::printf("  cv_mae %.6f\n", result.cv_mae);

  std::vector<std::string> outputs;
  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) throw InputError("cannot write file '" + args.out + "'");
    out << trial_table_csv(result.table);
    outputs.push_back(args.out);
    std::printf("trial table written %s\n", args.out.c_str());
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(args.out + ".manifest.json", "tune",
                   json{{"mode", args.mode}, {"trials", space.trials}, {"folds", args.folds},
                        {"seed", args.seed}, {"kernel", args.kernel}},
                   {args.data}, outputs, wall);
  }
  return 0;
}

struct BenchmarkArgs {
  std::string data;  // directory of CSV files, or a single CSV
  std::string out;   // output directory
  std::string modes = "ol,gol,cogol";
  int reps = 30;
  int trials = 0;
  int folds = 3;
  std::string kernel;
  std::uint64_t seed = 0;
  int threads = 0;
};

std::vector<Mode> parse_modes(const std::string& spec) {
  std::vector<Mode> modes;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) modes.push_back(mode_from_string(item));
  }
  if (modes.empty()) throw InputError("benchmark: empty mode list");
  return modes;
}

int cmd_benchmark(const BenchmarkArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Mode> modes = parse_modes(args.modes);

  std::vector<std::pair<std::string, std::string>> datasets;  // (name, path)
  if (fs::is_directory(args.data)) {
    for (const auto& entry : fs::directory_iterator(args.data)) {
      if (entry.path().extension() == ".csv") {
        datasets.emplace_back(entry.path().stem().string(), entry.path().string());
      }
    }
    std::sort(datasets.begin(), datasets.end());
    if (datasets.empty()) throw InputError("no .csv files in directory '" + args.data + "'");
  } else if (fs::exists(args.data)) {
    datasets.emplace_back(fs::path(args.data).stem().string(), args.data);
  } else {
    throw InputError("cannot open file '" + args.data + "'");
  }

  fs::create_directories(args.out);
  const std::string raw_path = (fs::path(args.out) / "raw.csv").string();
  const std::string summary_path = (fs::path(args.out) / "summary.csv").string();
  std::ofstream raw(raw_path);
  std::ofstream summary(summary_path);
  if (!raw || !summary) throw InputError("cannot write into directory '" + args.out + "'");
  raw.precision(17);
  summary.precision(17);
  raw << "dataset,mode,rep,mae,mse,acc,alpha,beta,gamma\n";
  summary << "model,dataset,metric,mean,p_vs_baseline\n";

  BenchmarkOptions opts;
  opts.modes = modes;
  opts.reps = args.reps;
  opts.seed = args.seed;
  opts.folds = args.folds;
  opts.trials = args.trials > 0 ? args.trials : (args.kernel.empty() ? 30 : 40);
  opts.kernel_rbf = !args.kernel.empty();
  opts.threads = args.threads;
  if (opts.kernel_rbf && kernel_kind_from_string(args.kernel) != KernelKind::RBF) {
    throw InputError("benchmark: only the rbf kernel is supported here");
  }

  const std::string p_header = "p_vs_" + to_string(modes[0]);
  std::printf("%-18s %-6s %9s %9s %9s %12s\n", "dataset", "mode", "mae", "mse", "acc",
              p_header.c_str());
  const std::vector<std::string> metric_names{"mae", "mse", "acc"};
  for (const auto& [name, path] : datasets) {
    try {
      const Dataset data = load_for_fit(path);
      const BenchmarkResult result = run_benchmark(data, opts);

      for (const auto& row : result.rows) {
        raw << name << "," << to_string(row.mode) << "," << row.rep << "," << row.test.mae << ","
            << row.test.mse << "," << row.test.accuracy << "," << row.alpha << "," << row.beta
            << ",";
        if (row.gamma) raw << *row.gamma;
        raw << "\n";
      }

      for (const Mode mode : modes) {
        double p_mae = 1.0;
        for (const auto& metric : metric_names) {
          const auto series = result.metric_series(mode, metric);
          double mean = 0.0;
          for (double v : series) mean += v;
          mean /= static_cast<double>(series.size());
          summary << to_string(mode) << "," << name << "," << metric << "," << mean << ",";
          if (mode == modes[0]) {
            summary << "\n";
          } else {
            const auto baseline = result.metric_series(modes[0], metric);
            const WilcoxonResult w = wilcoxon_signed_rank(series, baseline);
            summary << w.p_value << "\n";
            if (metric == "mae") p_mae = w.p_value;
          }
        }
        const double mae_mean = result.mean_metric(mode, "mae");
        const double mse_mean = result.mean_metric(mode, "mse");
        const double acc_mean = result.mean_metric(mode, "acc");
        if (mode == modes[0]) {
          std::printf("%-18s %-6s %9.4f %9.4f %9.4f %12s\n", name.c_str(),
                      to_string(mode).c_str(), mae_mean, mse_mean, acc_mean, "-");
        } else {
          std::printf("%-18s %-6s %9.4f %9.4f %9.4f %12.4g\n", name.c_str(),
                      to_string(mode).c_str(), mae_mean, mse_mean, acc_mean, p_mae);
        }
      }
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: dataset '%s' failed: %s\n", name.c_str(), e.what());
      summary << "error," << name << ",,,\n";
    }
  }
  raw.close();
  summary.close();

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::vector<std::string> inputs;
  for (const auto& [name, path] : datasets) inputs.push_back(path);
  write_manifest((fs::path(args.out) / "manifest.json").string(), "benchmark",
                 json{{"modes", args.modes}, {"reps", args.reps}, {"trials", opts.trials},
                      {"folds", args.folds}, {"seed", args.seed}, {"kernel", args.kernel}},
                 inputs, {raw_path, summary_path}, wall);
  std::printf("raw results %s\nsummary     %s\n", raw_path.c_str(), summary_path.c_str());
  return 0;
}

struct CompareArgs {
  std::string a;
  std::string b;
  std::string metric = "mae";
  std::string model_a;
  std::string model_b;
};

std::map<std::string, double> read_keyed_values(const std::string& path,
                                                const std::string& metric,
                                                const std::string& model) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty file '" + path + "'");

  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!s.empty() && s.back() == ',') out.push_back("");
    return out;
  };

  const auto header = split(line);
  std::map<std::string, std::size_t> cols;
  for (std::size_t i = 0; i < header.size(); ++i) cols[header[i]] = i;

  std::map<std::string, double> values;
  const bool summary_format = cols.count("model") && cols.count("dataset") &&
                              cols.count("metric") && cols.count("mean");
  if (!summary_format && header.size() < 2) {
    throw InputError(path + ": expected a benchmark summary CSV or a (key,value) CSV");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    if (summary_format) {
      if (fields.size() < 4) continue;
      if (fields[cols["metric"]] != metric) continue;
      if (!model.empty() && fields[cols["model"]] != model) continue;
      const std::string key = fields[cols["dataset"]];
      if (values.count(key)) {
        throw InputError(path + ": duplicate rows for dataset '" + key +
                         "'; disambiguate with --model-a/--model-b");
      }
      values[key] = std::stod(fields[cols["mean"]]);
    } else {
      values[fields[0]] = std::stod(fields[1]);
    }
  }
  if (values.empty()) {
    throw InputError(path + ": no rows matched metric '" + metric + "'" +
                     (model.empty() ? "" : " and model '" + model + "'"));
  }
  return values;
}

int cmd_compare(const CompareArgs& args) {
  const auto A = read_keyed_values(args.a, args.metric, args.model_a);
  const auto B = read_keyed_values(args.b, args.metric, args.model_b);

  std::vector<std::string> only_a, only_b;
  for (const auto& [k, v] : A) {
    if (!B.count(k)) only_a.push_back(k);
  }
  for (const auto& [k, v] : B) {
    if (!A.count(k)) only_b.push_back(k);
  }
  if (!only_a.empty() || !only_b.empty()) {
    std::string msg = "compare: dataset keys do not align;";
    if (!only_a.empty()) {
      msg += " only in A:";
      for (const auto& k : only_a) msg += " " + k;
    }
    if (!only_b.empty()) {
      msg += " only in B:";
      for (const auto& k : only_b) msg += " " + k;
    }
    throw InputError(msg);
  }

  std::vector<double> a_vals, b_vals;
  for (const auto& [k, v] : A) {
    a_vals.push_back(v);
    b_vals.push_back(B.at(k));
  }
  const WilcoxonResult w = wilcoxon_signed_rank(a_vals, b_vals);

  double mean_diff = 0.0;
  int a_lower = 0;
  for (std::size_t i = 0; i < a_vals.size(); ++i) {
    mean_diff += a_vals[i] - b_vals[i];
    if (a_vals[i] < b_vals[i]) ++a_lower;
  }
  mean_diff /= static_cast<double>(a_vals.size());

  std::printf("pairs            %zu (%d effective)\n", a_vals.size(), w.n_effective);
  std::printf("W                %.4g (W+ %.4g, W- %.4g)\n", w.statistic, w.w_plus, w.w_minus);
  if (w.degenerate) {
    std::printf("two-sided p      %.6g [degenerate: all differences zero]\n", w.p_value);
  } else {
    std::printf("two-sided p      %.6g%s\n", w.p_value,
                w.exact ? " (exact)" : " (normal approx)");
  }
  std::printf("mean diff (A-B)  %.6g\n", mean_diff);
  std::printf("direction        A lower on %d/%zu datasets\n", a_lower, a_vals.size());
  return 0;
}

struct SynthArgs {
  std::string kind = "parallel-bands";
  int n = 300;
  int k = 5;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_synth(const SynthArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  SyntheticSpec spec;
  spec.kind = synthetic_kind_from_string(args.kind);
  spec.n = args.n;
  spec.k = args.k;
  spec.noise_sd = args.noise;
  spec.seed = args.seed;

  const SyntheticData synth = make_synthetic(spec);
  save_csv(synth.data, args.out);
  const std::string sidecar = args.out + ".params.txt";
  {
    std::ofstream out(sidecar);
    if (!out) throw InputError("cannot write file '" + sidecar + "'");
    out << synth.params_text;
  }
  std::printf("dataset written  %s (n=%d p=2 k=%d)\n", args.out.c_str(), args.n, args.k);
  std::printf("parameters       %s\n", sidecar.c_str());

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(args.out + ".manifest.json", "synth",
                 json{{"kind", args.kind}, {"n", args.n}, {"k", args.k}, {"noise", args.noise},
                      {"seed", args.seed}},
                 {}, {args.out, sidecar}, wall);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"continuously generalized ordinal logistic models: train, tune and compare "
               "OL / GOL / coGOL ordinal regressors"};
  app.set_version_flag("--version", kToolVersion);
  app.set_config("--config", "", "plain 'key = value' file mirroring the flags; flags override");
  app.require_subcommand(1);

  TrainArgs train_args;
  auto* train_cmd = app.add_subcommand("train", "fit a model and write it as JSON");
  train_cmd->add_option("--data", train_args.data, "training CSV (last column = label)")
      ->required();
  train_cmd->add_option("--out", train_args.out, "output model JSON path")->required();
  train_cmd->add_option("--mode", train_args.mode, "ol, gol or cogol")
      ->check(CLI::IsMember({"ol", "gol", "cogol"}));
  train_cmd->add_option("--alpha", train_args.alpha, "L2 penalty strength");
  train_cmd->add_option("--beta", train_args.beta, "deviation penalty strength (inf ties rows)");
  train_cmd->add_option("--kernel", train_args.kernel, "linear or rbf (dual representation)")
      ->check(CLI::IsMember({"linear", "rbf"}));
  train_cmd->add_option("--gamma", train_args.gamma, "RBF bandwidth (default: heuristic)");
  train_cmd->add_option("--seed", train_args.seed, "jitter seed");
  train_cmd->add_option("--max-iters", train_args.max_iters, "iteration cap");
  train_cmd->add_option("--grad-tol", train_args.grad_tol, "gradient infinity-norm tolerance");
  train_cmd->add_flag("--trace", train_args.trace, "log per-iteration records to stderr");

  PredictArgs predict_args;
  auto* predict_cmd = app.add_subcommand("predict", "predict labels with a saved model");
  predict_cmd->add_option("--model", predict_args.model, "model JSON path")->required();
  predict_cmd->add_option("--data", predict_args.data, "input CSV")->required();
  predict_cmd->add_option("--out", predict_args.out, "predictions CSV path")->required();
  predict_cmd->add_flag("--no-labels", predict_args.no_labels,
                        "treat every column as a feature (no label column)");
  predict_cmd->add_option("--grid", predict_args.grid,
                          "also write a decision-boundary grid CSV (2-D models)");
  predict_cmd->add_option("--grid-steps", predict_args.grid_steps, "grid resolution per axis");

  TuneArgs tune_args;
  auto* tune_cmd = app.add_subcommand("tune", "random-search hyperparameters by k-fold CV");
  tune_cmd->add_option("--data", tune_args.data, "training CSV")->required();
  tune_cmd->add_option("--mode", tune_args.mode, "ol, gol or cogol")
      ->check(CLI::IsMember({"ol", "gol", "cogol"}));
  tune_cmd->add_option("--trials", tune_args.trials, "search budget (default 30, kernel 40)");
  tune_cmd->add_option("--folds", tune_args.folds, "CV folds");
  tune_cmd->add_option("--seed", tune_args.seed, "search seed");
  tune_cmd->add_option("--kernel", tune_args.kernel, "rbf to tune the kernelized model")
      ->check(CLI::IsMember({"rbf"}));
  tune_cmd->add_option("--out", tune_args.out, "trial table CSV path");

  BenchmarkArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("benchmark", "replicated tuned train/test protocol over datasets");
  bench_cmd->add_option("--data", bench_args.data, "CSV file or directory of CSVs")->required();
  bench_cmd->add_option("--out", bench_args.out, "output directory")->required();
  bench_cmd->add_option("--modes", bench_args.modes, "comma list of ol,gol,cogol");
  bench_cmd->add_option("--reps", bench_args.reps, "replications (seeded 75/25 splits)");
  bench_cmd->add_option("--trials", bench_args.trials, "tuning budget per split");
  bench_cmd->add_option("--folds", bench_args.folds, "inner CV folds");
  bench_cmd->add_option("--kernel", bench_args.kernel, "rbf to benchmark kernelized models")
      ->check(CLI::IsMember({"rbf"}));
  bench_cmd->add_option("--seed", bench_args.seed, "protocol seed");
  bench_cmd->add_option("--threads", bench_args.threads, "worker threads (0 = auto)");

  CompareArgs compare_args;
  auto* compare_cmd =
      app.add_subcommand("compare", "Wilcoxon signed-rank test between two result files");
  compare_cmd->add_option("--a", compare_args.a, "results CSV A")->required();
  compare_cmd->add_option("--b", compare_args.b, "results CSV B")->required();
  compare_cmd->add_option("--metric", compare_args.metric, "metric column to compare");
  compare_cmd->add_option("--model-a", compare_args.model_a, "model filter for file A");
  compare_cmd->add_option("--model-b", compare_args.model_b, "model filter for file B");

  SynthArgs synth_args;
  auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic ordinal dataset");
  synth_cmd->add_option("--kind", synth_args.kind,
                        "parallel-bands, rotating-boundaries or concentric-rings");
  synth_cmd->add_option("--n", synth_args.n, "sample count");
  synth_cmd->add_option("--k", synth_args.k, "class count");
  synth_cmd->add_option("--noise", synth_args.noise, "noise standard deviation");
  synth_cmd->add_option("--seed", synth_args.seed, "generator seed");
  synth_cmd->add_option("--out", synth_args.out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (train_cmd->parsed()) return cmd_train(train_args);
    if (predict_cmd->parsed()) return cmd_predict(predict_args);
    if (tune_cmd->parsed()) return cmd_tune(tune_args);
    if (bench_cmd->parsed()) return cmd_benchmark(bench_args);
    if (compare_cmd->parsed()) return cmd_compare(compare_args);
    if (synth_cmd->parsed()) return cmd_synth(synth_args);
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace cogol
