#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "cogol/rng.hpp"
#include "cogol/serialize.hpp"

using namespace cogol;
using nlohmann::json;

namespace {

OrdinalModel random_primal(Rng& rng, int k, int p, Mode mode) {
  OrdinalModel m;
  m.mode = mode;
  m.weights.resize(k - 1, p);
  m.thresholds.resize(k - 1);
  for (int j = 0; j < k - 1; ++j) {
    for (int c = 0; c < p; ++c) m.weights(j, c) = rng.normal() / 3.0;
    m.thresholds[j] = rng.normal();
  }
  return m;
}

DualModel random_dual(Rng& rng, int k, int m_support, int p, KernelKind kind) {
  DualModel m;
  m.mode = Mode::CoGOL;
  m.dual_coeffs.resize(k - 1, m_support);
  m.thresholds.resize(k - 1);
  m.spec.kind = kind;
  if (kind == KernelKind::RBF) m.spec.gamma = 0.25 + rng.uniform();
  m.spec.support_points.resize(m_support, p);
  for (int j = 0; j < k - 1; ++j) {
    m.thresholds[j] = rng.normal();
    for (int i = 0; i < m_support; ++i) m.dual_coeffs(j, i) = rng.normal();
  }
  for (int i = 0; i < m_support; ++i) {
    for (int c = 0; c < p; ++c) m.spec.support_points(i, c) = rng.normal();
  }
  return m;
}

}  // namespace

TEST_CASE("primal model round trip is bit-stable") {
  Rng rng(3);
  for (Mode mode : {Mode::OL, Mode::GOL, Mode::CoGOL}) {
    const OrdinalModel m = random_primal(rng, 5, 3, mode);
    const json doc = model_to_json(m);
    CHECK(doc.at("schema_version") == kModelSchemaVersion);
    CHECK(doc.at("k") == 5);
    CHECK(doc.at("p") == 3);
    CHECK(!doc.contains("kernel"));

    // the round trip passes through serialized TEXT, not the json object
    const AnyModel back = model_from_json(json::parse(doc.dump()));
    REQUIRE(std::holds_alternative<OrdinalModel>(back));
    const auto& r = std::get<OrdinalModel>(back);
    CHECK(r.mode == mode);
    CHECK((r.weights - m.weights).lpNorm<Eigen::Infinity>() == 0.0);
    CHECK((r.thresholds - m.thresholds).lpNorm<Eigen::Infinity>() == 0.0);
  }
}

TEST_CASE("awkward doubles survive the text round trip") {
  OrdinalModel m;
  m.mode = Mode::GOL;
  m.weights.resize(2, 2);
  m.weights << 1.0 / 3.0, std::sqrt(2.0), 0.1, -1e-17;
  m.thresholds.resize(2);
  m.thresholds << -0.30000000000000004, 2.2250738585072014e-308;
  const AnyModel back = model_from_json(json::parse(model_to_json(m).dump()));
  const auto& r = std::get<OrdinalModel>(back);
  CHECK((r.weights - m.weights).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(r.thresholds[0] == m.thresholds[0]);
  CHECK(r.thresholds[1] == m.thresholds[1]);
}

TEST_CASE("dual model round trip keeps kernel fields") {
  Rng rng(7);
  for (KernelKind kind : {KernelKind::RBF, KernelKind::Linear}) {
    const DualModel m = random_dual(rng, 4, 10, 2, kind);
    const json doc = model_to_json(m);
    REQUIRE(doc.contains("kernel"));
    CHECK(doc["kernel"].at("kind") == to_string(kind));
    CHECK(doc["kernel"].contains("gamma") == (kind == KernelKind::RBF));

    const AnyModel back = model_from_json(json::parse(doc.dump()));
    REQUIRE(std::holds_alternative<DualModel>(back));
    const auto& r = std::get<DualModel>(back);
    CHECK(r.spec.kind == kind);
    if (kind == KernelKind::RBF) CHECK(r.spec.gamma == m.spec.gamma);
    CHECK((r.dual_coeffs - m.dual_coeffs).lpNorm<Eigen::Infinity>() == 0.0);
    CHECK((r.spec.support_points - m.spec.support_points).lpNorm<Eigen::Infinity>() == 0.0);

    // identical predictions after the round trip
    Eigen::MatrixXd X(6, 2);
    for (int i = 0; i < 6; ++i) {
      X(i, 0) = rng.normal();
      X(i, 1) = rng.normal();
    }
    CHECK(predict(m, X) == predict(r, X));
  }
}

TEST_CASE("model files save and load") {
  Rng rng(11);
  const OrdinalModel m = random_primal(rng, 3, 4, Mode::CoGOL);
  const auto path =
      (std::filesystem::temp_directory_path() / "cogol_test_model.json").string();
  save_model(m, path);
  const AnyModel back = load_model(path);
  CHECK(feature_dim(back) == 4);
  const auto& r = std::get<OrdinalModel>(back);
  CHECK((r.weights - m.weights).lpNorm<Eigen::Infinity>() == 0.0);

  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), InputError);
}

TEST_CASE("document validation") {
  Rng rng(13);
  const json good = model_to_json(random_primal(rng, 3, 2, Mode::OL));

  json missing = good;
  missing.erase("thresholds");
  CHECK_THROWS_AS(model_from_json(missing), InputError);

  json bad_version = good;
  bad_version["schema_version"] = 99;
  CHECK_THROWS_AS(model_from_json(bad_version), InputError);

  json bad_mode = good;
  bad_mode["mode"] = "quantile";
  CHECK_THROWS_AS(model_from_json(bad_mode), std::invalid_argument);

  json short_weights = good;
  short_weights["weights"] = json::array({1.0, 2.0});
  CHECK_THROWS_AS(model_from_json(short_weights), InputError);

  json nan_weights = good;
  nan_weights["weights"][0] = "not a number";
  CHECK_THROWS_AS(model_from_json(nan_weights), json::exception);

  CHECK_THROWS_AS(model_from_json(json::parse("[1,2,3]")), InputError);
}
