#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cogol/dataset.hpp"
#include "cogol/model.hpp"

namespace cogol {

struct SplitPlan {
  std::vector<double> fractions;  // in (0,1), summing to 1
  std::uint64_t seed = 0;
  bool stratified = true;
};

enum class SyntheticKind { ParallelBands, RotatingBoundaries, ConcentricRings };

std::string to_string(SyntheticKind kind);
SyntheticKind synthetic_kind_from_string(const std::string& s);

struct SyntheticSpec {
  SyntheticKind kind = SyntheticKind::ParallelBands;
  int n = 300;
  int k = 5;
  double noise_sd = 0.0;
  std::uint64_t seed = 0;
};

struct CsvLoad {
  Dataset dataset;
  std::vector<std::string> warnings;  // e.g. degenerate single-class labels
  bool had_header = false;
};

/// Comma-separated numeric file, last column an integer label >= 1;
/// a non-numeric first row is treated as a header. k is the maximum label.
/// Throws InputError with file/row/column coordinates on parse errors,
/// non-finite cells, ragged rows, or invalid labels.
CsvLoad load_csv(const std::string& path);

/// Writes the loader's format back out (header f1..fp,label; shortest
/// round-trip formatting, so save/load is bit-stable).
void save_csv(const Dataset& data, const std::string& path);

/// Numeric CSV with every column treated as a feature (no label column);
/// header auto-detected like load_csv.
Eigen::MatrixXd load_matrix_csv(const std::string& path);

struct Standardized {
  Dataset train;
  std::vector<Dataset> others;
  Eigen::VectorXd means;
  Eigen::VectorXd sds;  // population sd; zero-variance columns get 1
};

/// Centers and scales every feature by the training statistics and applies
/// the same transform to the other datasets.
Standardized standardize(const Dataset& train, const std::vector<Dataset>& apply_to);

/// Stratified k-fold indices: per-class shuffle then round-robin assignment
/// starting at a seed-derived offset, so per-class fold counts differ by at
/// most one. Returns (train, validation) index pairs partitioning 0..n-1.
std::vector<std::pair<std::vector<int>, std::vector<int>>> stratified_kfold(
    const Dataset& data, int folds, std::uint64_t seed);

/// Index sets for a SplitPlan (e.g. {0.75, 0.25} train/test); stratified
/// plans allocate per class by largest remainder. Deterministic in the seed.
std::vector<std::vector<int>> split_indices(const Dataset& data, const SplitPlan& plan);

/// Synthetic dataset plus the generating parameters.
/// - ParallelBands: labels from one shared direction and monotone
///   thresholds (the OL assumption), optional score noise.
/// - RotatingBoundaries: per-threshold directions spread over a 30 degree
///   arc; labels count crossed hyperplanes (the GOL regime).
/// - ConcentricRings: radial ordinal bands; linearly inseparable.
/// All kinds use p = 2 and regenerate bit-identically from (spec, seed).
struct SyntheticData {
  Dataset data;
  Eigen::MatrixXd true_weights;     // (k-1) x 2 generating rows (bands/rotating)
  Eigen::VectorXd true_thresholds;  // k-1
  std::vector<double> ring_radii;   // rings only: band center radii
  std::string params_text;          // sidecar description of the generators
};

SyntheticData make_synthetic(const SyntheticSpec& spec);

/// Expected (n, p, k) of the 17 standard ordinal benchmark datasets; used
/// to check supplied CSV files against the published shapes.
struct BenchmarkShape {
  std::string name;
  int n;
  int p;
  int k;
};

const std::vector<BenchmarkShape>& benchmark_catalog();

}  // namespace cogol
