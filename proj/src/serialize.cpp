#include "cogol/serialize.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "cogol/dataset.hpp"

namespace cogol {

namespace {

using nlohmann::json;

json matrix_row_major(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) rows.push_back(m(r, c));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_row_major(const json& arr, Eigen::Index rows, Eigen::Index cols,
                                      const std::string& field) {
  if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != rows * cols) {
    throw InputError("model document: field '" + field + "' must hold " +
                     std::to_string(rows * cols) + " numbers");
  }
  Eigen::MatrixXd m(rows, cols);
  Eigen::Index i = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = arr[static_cast<std::size_t>(i++)].get<double>();
  }
  return m;
}

json vector_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Eigen::VectorXd vector_from_json(const json& arr, Eigen::Index size, const std::string& field) {
  if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != size) {
    throw InputError("model document: field '" + field + "' must hold " + std::to_string(size) +
                     " numbers");
  }
  Eigen::VectorXd v(size);
  for (Eigen::Index i = 0; i < size; ++i) v[i] = arr[static_cast<std::size_t>(i)].get<double>();
  return v;
}

json common_fields(Mode mode, int k, Eigen::Index p, const Eigen::MatrixXd& weights,
                   const Eigen::VectorXd& thresholds) {
  json doc;
  doc["schema_version"] = kModelSchemaVersion;
  doc["mode"] = to_string(mode);
  doc["k"] = k;
  doc["p"] = static_cast<int>(p);
  doc["weights"] = matrix_row_major(weights);
  doc["thresholds"] = vector_json(thresholds);
  return doc;
}

}  // namespace

json model_to_json(const OrdinalModel& model) {
  return common_fields(model.mode, model.k(), model.p(), model.weights, model.thresholds);
}

json model_to_json(const DualModel& model) {
  json doc = common_fields(model.mode, model.k(), model.p(), model.dual_coeffs, model.thresholds);
  json kernel;
  kernel["kind"] = to_string(model.spec.kind);
  if (model.spec.kind == KernelKind::RBF) kernel["gamma"] = model.spec.gamma;
  json support = json::array();
  for (Eigen::Index r = 0; r < model.spec.support_points.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < model.spec.support_points.cols(); ++c) {
      row.push_back(model.spec.support_points(r, c));
    }
    support.push_back(std::move(row));
  }
  kernel["support_points"] = std::move(support);
  doc["kernel"] = std::move(kernel);
  return doc;
}

json model_to_json(const AnyModel& model) {
  return std::visit([](const auto& m) { return model_to_json(m); }, model);
}

AnyModel model_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("model document: expected a JSON object");
  for (const char* field : {"schema_version", "mode", "k", "p", "weights", "thresholds"}) {
    if (!doc.contains(field)) {
      throw InputError(std::string("model document: missing field '") + field + "'");
    }
  }
  const int version = doc["schema_version"].get<int>();
  if (version != kModelSchemaVersion) {
    throw InputError("model document: unsupported schema_version " + std::to_string(version) +
                     " (expected " + std::to_string(kModelSchemaVersion) + ")");
  }
  const Mode mode = mode_from_string(doc["mode"].get<std::string>());
  const int k = doc["k"].get<int>();
  const int p = doc["p"].get<int>();
  if (k < 2 || p < 1) throw InputError("model document: need k >= 2 and p >= 1");
  const Eigen::Index m = k - 1;

  const Eigen::VectorXd thresholds = vector_from_json(doc["thresholds"], m, "thresholds");

  if (!doc.contains("kernel")) {
    OrdinalModel model;
    model.mode = mode;
    model.thresholds = thresholds;
    model.weights = matrix_from_row_major(doc["weights"], m, p, "weights");
    if (!model.weights.allFinite() || !model.thresholds.allFinite()) {
      throw InputError("model document: non-finite parameters");
    }
    return model;
  }

  const json& kj = doc["kernel"];
  DualModel model;
  model.mode = mode;
  model.thresholds = thresholds;
  model.spec.kind = kernel_kind_from_string(kj.at("kind").get<std::string>());
  if (model.spec.kind == KernelKind::RBF) {
    model.spec.gamma = kj.at("gamma").get<double>();
    if (!(model.spec.gamma > 0.0)) throw InputError("model document: gamma must be positive");
  }
  const json& support = kj.at("support_points");
  if (!support.is_array() || support.empty()) {
    throw InputError("model document: kernel.support_points must be a non-empty array of rows");
  }
  const Eigen::Index mrows = static_cast<Eigen::Index>(support.size());
  model.spec.support_points.resize(mrows, p);
  for (Eigen::Index r = 0; r < mrows; ++r) {
    const json& row = support[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != p) {
      throw InputError("model document: support point row " + std::to_string(r) + " must hold " +
                       std::to_string(p) + " numbers");
    }
    for (Eigen::Index c = 0; c < p; ++c) {
      model.spec.support_points(r, c) = row[static_cast<std::size_t>(c)].get<double>();
    }
  }
  model.dual_coeffs = matrix_from_row_major(doc["weights"], m, mrows, "weights");
  if (!model.dual_coeffs.allFinite() || !model.thresholds.allFinite() ||
      !model.spec.support_points.allFinite()) {
    throw InputError("model document: non-finite parameters");
  }
  return model;
}

void save_model(const AnyModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file '" + path + "'");
  out << model_to_json(model).dump(2) << "\n";
}

AnyModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw InputError("model document '" + path + "': " + e.what());
  }
  return model_from_json(doc);
}

std::vector<int> predict_any(const AnyModel& model, const Eigen::MatrixXd& X) {
  return std::visit([&](const auto& m) { return predict(m, X); }, model);
}

Eigen::Index feature_dim(const AnyModel& model) {
  return std::visit([](const auto& m) { return m.p(); }, model);
}

}  // namespace cogol
