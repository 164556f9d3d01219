#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cogol/kernel.hpp"
#include "cogol/model.hpp"

namespace cogol {

/// Versioned model document:
///   { schema_version, mode, k, p, weights (row-major), thresholds,
///     kernel?: { kind, gamma?, support_points } }
/// Doubles are written in shortest round-trip form, so save/load is
/// bit-stable within 17 significant digits.
inline constexpr int kModelSchemaVersion = 1;

using AnyModel = std::variant<OrdinalModel, DualModel>;

nlohmann::json model_to_json(const OrdinalModel& model);
nlohmann::json model_to_json(const DualModel& model);
nlohmann::json model_to_json(const AnyModel& model);

AnyModel model_from_json(const nlohmann::json& doc);

void save_model(const AnyModel& model, const std::string& path);
AnyModel load_model(const std::string& path);

std::vector<int> predict_any(const AnyModel& model, const Eigen::MatrixXd& X);
Eigen::Index feature_dim(const AnyModel& model);

}  // namespace cogol
