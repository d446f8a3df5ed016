#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "earlyrisk/embeddings.hpp"

namespace earlyrisk {

/// Row-major dense matrix; all the tensor machinery this network needs.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

/// Document classifier: one convolution layer (100 filters spanning 2 tokens),
/// CReLU, 1-max pooling, three CReLU fully-connected layers (dropout on the
/// first one's output), and a softmax readout.
struct CnnConfig {
  int seq_len = 100;  // documents are truncated to their first 100 tokens
  int embed_dim = 50;
  int n_filters = 100;
  int filter_height = 2;
  /// CReLU doubles each width, so the default 25 gives the 1x50 pre-softmax
  /// vector feeding the output layer.
  std::array<int, 3> fc_sizes{64, 48, 25};
  double dropout_rate = 0.5;
  int n_classes = 2;
  std::uint64_t seed = 42;

  void validate() const;
  int conv_positions() const { return seq_len - filter_height + 1; }
};

struct CnnModel {
  CnnConfig config;
  Matrix conv_w;  // n_filters x (filter_height * embed_dim)
  std::vector<double> conv_b;
  Matrix fc1_w;  // fc_sizes[0] x (2 * n_filters)
  std::vector<double> fc1_b;
  Matrix fc2_w;  // fc_sizes[1] x (2 * fc_sizes[0])
  std::vector<double> fc2_b;
  Matrix fc3_w;  // fc_sizes[2] x (2 * fc_sizes[1])
  std::vector<double> fc3_b;
  Matrix out_w;  // n_classes x (2 * fc_sizes[2])
  std::vector<double> out_b;

  /// Fan-in scaled uniform weights, zero biases, reproducible from cfg.seed.
  static CnnModel init(const CnnConfig& cfg);
};

struct ForwardCache {
  Matrix input;
  Matrix conv_pre;               // positions x n_filters
  std::vector<int> pool_src;     // argmax position per CReLU channel
  std::vector<double> pooled;    // 2 * n_filters
  std::vector<double> fc1_pre, fc1_act, dropout_scale, fc1_dropped;
  std::vector<double> fc2_pre, fc2_act;
  std::vector<double> fc3_pre, fc3_act;
  std::vector<double> probs;
  bool train_mode = false;
};

struct ForwardResult {
  std::vector<double> probs;
  ForwardCache cache;
};

/// In train mode, dropout draws its mask from `rng` (inverted dropout, so
/// evaluation needs no rescaling).
ForwardResult forward(const CnnModel& model, const Matrix& doc_matrix, bool train_mode,
                      std::mt19937_64& rng);
/// Evaluation-mode forward pass.
std::vector<double> forward_eval(const CnnModel& model, const Matrix& doc_matrix);

struct CnnGradients {
  Matrix conv_w;
  std::vector<double> conv_b;
  Matrix fc1_w;
  std::vector<double> fc1_b;
  Matrix fc2_w;
  std::vector<double> fc2_b;
  Matrix fc3_w;
  std::vector<double> fc3_b;
  Matrix out_w;
  std::vector<double> out_b;

  static CnnGradients zeros_like(const CnnModel& model);
  void accumulate(const CnnGradients& other);
  void scale(double factor);
};

double cross_entropy(std::span<const double> probs, int target);

/// Cross-entropy gradients for every parameter; pooling routes to the argmax
/// position, CReLU to the active half, and the cached dropout mask is reused.
CnnGradients backward(const CnnModel& model, const ForwardCache& cache, int target);

enum class Optimizer { plain_sgd, adaptive_moment };

struct TrainConfig {
  double learning_rate = 1e-3;
  int batch_size = 16;
  int epochs = 10;
  Optimizer optimizer = Optimizer::adaptive_moment;
  double l2_weight = 0.0;  // applied to weights, not biases
  std::uint64_t seed = 1;
};

struct TrainExample {
  Matrix input;
  int label = 0;
};

struct TrainReport {
  std::vector<double> epoch_loss;  // mean loss per epoch
};

/// Mini-batch training, deterministic for a fixed seed (shuffle order and
/// dropout masks included). Throws NumericError if the loss diverges.
TrainReport train(CnnModel& model, std::span<const TrainExample> dataset, const TrainConfig& cfg);

/// Linear interpolation at rank q * (n - 1) over the sorted values.
double percentile_interpolated(std::vector<double> values, double q);

/// User-level score: per-document positive-class probabilities reduced to
/// their 98th percentile, which weighs high-scoring documents more than the
/// mean would.
double predict_user(const CnnModel& model, std::span<const Matrix> documents);

/// seq_len x dim matrix from the first seq_len tokens; out-of-vocabulary
/// tokens and padding rows stay zero.
Matrix build_doc_matrix(const EmbeddingTable& table, std::span<const std::string> tokens,
                        int seq_len);

std::string serialize_cnn(const CnnModel& model);
CnnModel deserialize_cnn(const std::string& json_text);

void write_loss_csv(const TrainReport& report, const std::string& path);

}  // namespace earlyrisk
