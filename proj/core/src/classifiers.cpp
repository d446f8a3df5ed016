#include "earlyrisk/classifiers.hpp"

#include <cmath>

#include <json.hpp>

#include "earlyrisk/errors.hpp"

namespace earlyrisk {

namespace {

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

void check_training_set(const std::vector<std::vector<double>>& features,
                        std::span<const int> labels) {
  if (features.empty()) throw ValidationError("train_logistic: empty training set");
  if (features.size() != labels.size())
    throw ValidationError("train_logistic: features/labels size mismatch");
  const std::size_t dim = features.front().size();
  bool has_pos = false, has_neg = false;
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].size() != dim)
      throw ValidationError("train_logistic: inconsistent feature dimension");
    if (labels[i] == 1)
      has_pos = true;
    else if (labels[i] == 0)
      has_neg = true;
    else
      throw ValidationError("train_logistic: labels must be 0 or 1");
  }
  if (!has_pos || !has_neg)
    throw ValidationError("train_logistic: training data contains a single class");
}

}  // namespace

void logistic_gradient(const LogisticModel& model,
                       const std::vector<std::vector<double>>& features,
                       std::span<const int> labels, double l2_weight,
                       std::vector<double>& grad_w, double& grad_b) {
  const std::size_t n = features.size();
  const std::size_t dim = model.weights.size();
  grad_w.assign(dim, 0.0);
  grad_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double p = predict_logistic(model, features[i]);
    double err = p - static_cast<double>(labels[i]);
    for (std::size_t d = 0; d < dim; ++d) grad_w[d] += err * features[i][d];
    grad_b += err;
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t d = 0; d < dim; ++d) grad_w[d] = grad_w[d] * inv_n + l2_weight * model.weights[d];
  grad_b *= inv_n;
}

LogisticModel train_logistic(const std::vector<std::vector<double>>& features,
                             std::span<const int> labels,
                             const LogisticTrainConfig& cfg) {
  check_training_set(features, labels);
  if (cfg.learning_rate <= 0.0) throw ValidationError("train_logistic: learning_rate must be > 0");
  if (cfg.epochs < 1) throw ValidationError("train_logistic: epochs must be >= 1");

  LogisticModel model;
  model.weights.assign(features.front().size(), 0.0);

  std::vector<double> grad_w;
  double grad_b = 0.0;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    logistic_gradient(model, features, labels, cfg.l2_weight, grad_w, grad_b);
    for (std::size_t d = 0; d < model.weights.size(); ++d)
      model.weights[d] -= cfg.learning_rate * grad_w[d];
    model.bias -= cfg.learning_rate * grad_b;
  }
  return model;
}

double predict_logistic(const LogisticModel& model, std::span<const double> features) {
  if (features.size() != model.weights.size())
    throw ValidationError("predict_logistic: feature dimension mismatch");
  double z = model.bias;
  for (std::size_t d = 0; d < features.size(); ++d) z += model.weights[d] * features[d];
  return sigmoid(z);
}

UserPrediction fuse(const UserPrediction& a, const UserPrediction& b) {
  if (a.user_id != b.user_id)
    throw ValidationError("fuse: user mismatch: " + a.user_id + " vs " + b.user_id);
  UserPrediction out;
  out.user_id = a.user_id;
  out.probability = 0.5 * (a.probability + b.probability);
  out.source = PredictionSource::ensemble;
  return out;
}

std::string serialize_logistic(const LogisticModel& model) {
  nlohmann::json j;
  j["weights"] = model.weights;
  j["bias"] = model.bias;
  j["feature_order"] = model.feature_order;
  return j.dump(2);
}

LogisticModel deserialize_logistic(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("logistic model: invalid JSON: ") + e.what());
  }
  LogisticModel model;
  if (!j.contains("weights") || !j["weights"].is_array())
    throw ParseError("logistic model: missing weights");
  model.weights = j["weights"].get<std::vector<double>>();
  model.bias = j.value("bias", 0.0);
  if (j.contains("feature_order"))
    model.feature_order = j["feature_order"].get<std::vector<std::string>>();
  return model;
}

}  // namespace earlyrisk
