#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace earlyrisk {

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  /// Names of the features in weight order, kept for serialization checks.
  std::vector<std::string> feature_order;
};

struct LogisticTrainConfig {
  double learning_rate = 0.1;
  int epochs = 500;
  double l2_weight = 1e-4;
  std::uint64_t seed = 0;  // unused by full-batch descent, kept for manifests
};

/// Minimizes L2-regularized cross-entropy by full-batch gradient descent from
/// zero initialization. Requires at least one example of each class.
LogisticModel train_logistic(const std::vector<std::vector<double>>& features,
                             std::span<const int> labels,
                             const LogisticTrainConfig& cfg = {});

/// sigmoid(w.x + b)
double predict_logistic(const LogisticModel& model, std::span<const double> features);

/// Gradient of the training objective at the given parameters; exposed so the
/// analytic gradient can be checked against finite differences.
void logistic_gradient(const LogisticModel& model,
                       const std::vector<std::vector<double>>& features,
                       std::span<const int> labels, double l2_weight,
                       std::vector<double>& grad_w, double& grad_b);

enum class PredictionSource { metadata, cnn, ensemble };

struct UserPrediction {
  std::string user_id;
  double probability = 0.0;
  PredictionSource source = PredictionSource::metadata;
};

/// Late fusion: arithmetic mean of two probabilities for the same user; the
/// inputs are used as-is, no calibration.
UserPrediction fuse(const UserPrediction& a, const UserPrediction& b);

std::string serialize_logistic(const LogisticModel& model);
LogisticModel deserialize_logistic(const std::string& json_text);

}  // namespace earlyrisk
