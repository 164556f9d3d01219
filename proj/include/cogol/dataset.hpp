#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

namespace cogol {

/// Thrown for problems with user-supplied input (files, CSV contents,
/// command arguments, degenerate geometry). The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordinal dataset: a dense feature matrix and 1-based labels in 1..k.
/// Immutable by convention once constructed; safe to share across threads.
struct Dataset {
  Eigen::MatrixXd features;  // n x p
  std::vector<int> labels;   // length n, values in 1..k
  int k = 0;                 // class count

  Eigen::Index n() const { return features.rows(); }
  Eigen::Index p() const { return features.cols(); }
};

/// Throws std::invalid_argument when the dataset violates its invariants:
/// n >= 1, p >= 1, k >= 2, labels in 1..k, finite features.
void validate(const Dataset& data);

/// Subset by row indices; class count metadata is preserved even when a
/// class is absent from the subset.
Dataset take(const Dataset& data, const std::vector<int>& indices);

}  // namespace cogol
