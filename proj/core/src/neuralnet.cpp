#include "earlyrisk/neuralnet.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "earlyrisk/errors.hpp"

namespace earlyrisk {

void CnnConfig::validate() const {
  if (seq_len < filter_height) throw ValidationError("cnn config: seq_len < filter_height");
  if (embed_dim < 1) throw ValidationError("cnn config: embed_dim must be >= 1");
  if (n_filters < 1) throw ValidationError("cnn config: n_filters must be >= 1");
  if (filter_height < 1) throw ValidationError("cnn config: filter_height must be >= 1");
  for (int s : fc_sizes)
    if (s < 1) throw ValidationError("cnn config: fc sizes must be >= 1");
  if (dropout_rate < 0.0 || dropout_rate >= 1.0)
    throw ValidationError("cnn config: dropout_rate must be in [0, 1)");
  if (n_classes < 2) throw ValidationError("cnn config: n_classes must be >= 2");
}

namespace {

void fill_uniform(std::vector<double>& data, double bound, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-bound, bound);
  for (double& x : data) x = dist(rng);
}

std::vector<double> crelu(std::span<const double> pre) {
  const std::size_t n = pre.size();
  std::vector<double> act(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    act[i] = std::max(0.0, pre[i]);
    act[n + i] = std::max(0.0, -pre[i]);
  }
  return act;
}

// g_act over the doubled channels folded back onto the pre-activations
std::vector<double> crelu_backward(std::span<const double> pre, std::span<const double> g_act) {
  const std::size_t n = pre.size();
  std::vector<double> g_pre(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (pre[i] > 0.0) g_pre[i] += g_act[i];
    if (pre[i] < 0.0) g_pre[i] -= g_act[n + i];
  }
  return g_pre;
}

std::vector<double> fc_forward(const Matrix& w, std::span<const double> b,
                               std::span<const double> x) {
  std::vector<double> pre(static_cast<std::size_t>(w.rows));
  for (int i = 0; i < w.rows; ++i) {
    double s = b[static_cast<std::size_t>(i)];
    const double* row = w.data.data() + static_cast<std::size_t>(i) * w.cols;
    for (int j = 0; j < w.cols; ++j) s += row[j] * x[static_cast<std::size_t>(j)];
    pre[static_cast<std::size_t>(i)] = s;
  }
  return pre;
}

// fills dW/db and returns the gradient w.r.t. the layer input
std::vector<double> fc_backward(const Matrix& w, std::span<const double> x,
                                std::span<const double> g_pre, Matrix& dw,
                                std::vector<double>& db) {
  std::vector<double> g_x(static_cast<std::size_t>(w.cols), 0.0);
  for (int i = 0; i < w.rows; ++i) {
    const double g = g_pre[static_cast<std::size_t>(i)];
    db[static_cast<std::size_t>(i)] += g;
    double* dw_row = dw.data.data() + static_cast<std::size_t>(i) * w.cols;
    const double* w_row = w.data.data() + static_cast<std::size_t>(i) * w.cols;
    for (int j = 0; j < w.cols; ++j) {
      dw_row[j] += g * x[static_cast<std::size_t>(j)];
      g_x[static_cast<std::size_t>(j)] += w_row[j] * g;
    }
  }
  return g_x;
}

std::vector<double> softmax(std::span<const double> logits) {
  const double m = *std::max_element(logits.begin(), logits.end());
  std::vector<double> p(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - m);
    sum += p[i];
  }
  for (double& x : p) x /= sum;
  return p;
}

}  // namespace

CnnModel CnnModel::init(const CnnConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);

  CnnModel m;
  m.config = cfg;
  const int conv_in = cfg.filter_height * cfg.embed_dim;
  m.conv_w = Matrix(cfg.n_filters, conv_in);
  fill_uniform(m.conv_w.data, 1.0 / std::sqrt(conv_in), rng);
  m.conv_b.assign(static_cast<std::size_t>(cfg.n_filters), 0.0);

  auto init_fc = [&rng](Matrix& w, std::vector<double>& b, int out, int in) {
    w = Matrix(out, in);
    fill_uniform(w.data, 1.0 / std::sqrt(in), rng);
    b.assign(static_cast<std::size_t>(out), 0.0);
  };
  init_fc(m.fc1_w, m.fc1_b, cfg.fc_sizes[0], 2 * cfg.n_filters);
  init_fc(m.fc2_w, m.fc2_b, cfg.fc_sizes[1], 2 * cfg.fc_sizes[0]);
  init_fc(m.fc3_w, m.fc3_b, cfg.fc_sizes[2], 2 * cfg.fc_sizes[1]);
  init_fc(m.out_w, m.out_b, cfg.n_classes, 2 * cfg.fc_sizes[2]);
  return m;
}

ForwardResult forward(const CnnModel& model, const Matrix& doc_matrix, bool train_mode,
                      std::mt19937_64& rng) {
  const CnnConfig& cfg = model.config;
  if (doc_matrix.rows != cfg.seq_len || doc_matrix.cols != cfg.embed_dim)
    throw ValidationError("forward: document matrix must be " + std::to_string(cfg.seq_len) +
                          "x" + std::to_string(cfg.embed_dim) + ", got " +
                          std::to_string(doc_matrix.rows) + "x" + std::to_string(doc_matrix.cols));
  for (double x : doc_matrix.data)
    if (!std::isfinite(x)) throw ValidationError("forward: non-finite input");

  ForwardCache cache;
  cache.input = doc_matrix;
  cache.train_mode = train_mode;

  const int positions = cfg.conv_positions();
  const int F = cfg.n_filters;
  cache.conv_pre = Matrix(positions, F);
  for (int p = 0; p < positions; ++p) {
    for (int f = 0; f < F; ++f) {
      double s = model.conv_b[static_cast<std::size_t>(f)];
      const double* w = model.conv_w.data.data() + static_cast<std::size_t>(f) * model.conv_w.cols;
      for (int h = 0; h < cfg.filter_height; ++h) {
        const double* in_row = doc_matrix.data.data() +
                               static_cast<std::size_t>(p + h) * doc_matrix.cols;
        const double* w_row = w + static_cast<std::size_t>(h) * cfg.embed_dim;
        for (int d = 0; d < cfg.embed_dim; ++d) s += w_row[d] * in_row[d];
      }
      cache.conv_pre.at(p, f) = s;
    }
  }

  // CReLU + 1-max pooling fused: channel f pools relu(pre), channel F+f
  // pools relu(-pre)
  cache.pooled.assign(static_cast<std::size_t>(2 * F), 0.0);
  cache.pool_src.assign(static_cast<std::size_t>(2 * F), 0);
  for (int f = 0; f < F; ++f) {
    double best_pos = std::max(0.0, cache.conv_pre.at(0, f));
    double best_neg = std::max(0.0, -cache.conv_pre.at(0, f));
    int arg_pos = 0, arg_neg = 0;
    for (int p = 1; p < positions; ++p) {
      const double v = cache.conv_pre.at(p, f);
      if (std::max(0.0, v) > best_pos) {
        best_pos = std::max(0.0, v);
        arg_pos = p;
      }
      if (std::max(0.0, -v) > best_neg) {
        best_neg = std::max(0.0, -v);
        arg_neg = p;
      }
    }
    cache.pooled[static_cast<std::size_t>(f)] = best_pos;
    cache.pooled[static_cast<std::size_t>(F + f)] = best_neg;
    cache.pool_src[static_cast<std::size_t>(f)] = arg_pos;
    cache.pool_src[static_cast<std::size_t>(F + f)] = arg_neg;
  }

  cache.fc1_pre = fc_forward(model.fc1_w, model.fc1_b, cache.pooled);
  cache.fc1_act = crelu(cache.fc1_pre);

  cache.dropout_scale.assign(cache.fc1_act.size(), 1.0);
  if (train_mode && cfg.dropout_rate > 0.0) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double keep_scale = 1.0 / (1.0 - cfg.dropout_rate);
    for (double& s : cache.dropout_scale)
      s = unit(rng) < cfg.dropout_rate ? 0.0 : keep_scale;
  }
  cache.fc1_dropped.resize(cache.fc1_act.size());
  for (std::size_t i = 0; i < cache.fc1_act.size(); ++i)
    cache.fc1_dropped[i] = cache.fc1_act[i] * cache.dropout_scale[i];

  cache.fc2_pre = fc_forward(model.fc2_w, model.fc2_b, cache.fc1_dropped);
  cache.fc2_act = crelu(cache.fc2_pre);
  cache.fc3_pre = fc_forward(model.fc3_w, model.fc3_b, cache.fc2_act);
  cache.fc3_act = crelu(cache.fc3_pre);

  const std::vector<double> logits = fc_forward(model.out_w, model.out_b, cache.fc3_act);
  cache.probs = softmax(logits);

  ForwardResult result;
  result.probs = cache.probs;
  result.cache = std::move(cache);
  return result;
}

std::vector<double> forward_eval(const CnnModel& model, const Matrix& doc_matrix) {
  std::mt19937_64 unused(0);
  return forward(model, doc_matrix, /*train_mode=*/false, unused).probs;
}

CnnGradients CnnGradients::zeros_like(const CnnModel& model) {
  CnnGradients g;
  g.conv_w = Matrix(model.conv_w.rows, model.conv_w.cols);
  g.conv_b.assign(model.conv_b.size(), 0.0);
  g.fc1_w = Matrix(model.fc1_w.rows, model.fc1_w.cols);
  g.fc1_b.assign(model.fc1_b.size(), 0.0);
  g.fc2_w = Matrix(model.fc2_w.rows, model.fc2_w.cols);
  g.fc2_b.assign(model.fc2_b.size(), 0.0);
  g.fc3_w = Matrix(model.fc3_w.rows, model.fc3_w.cols);
  g.fc3_b.assign(model.fc3_b.size(), 0.0);
  g.out_w = Matrix(model.out_w.rows, model.out_w.cols);
  g.out_b.assign(model.out_b.size(), 0.0);
  return g;
}

namespace {

void axpy(std::vector<double>& y, const std::vector<double>& x, double a = 1.0) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace

void CnnGradients::accumulate(const CnnGradients& other) {
  axpy(conv_w.data, other.conv_w.data);
  axpy(conv_b, other.conv_b);
  axpy(fc1_w.data, other.fc1_w.data);
  axpy(fc1_b, other.fc1_b);
  axpy(fc2_w.data, other.fc2_w.data);
  axpy(fc2_b, other.fc2_b);
  axpy(fc3_w.data, other.fc3_w.data);
  axpy(fc3_b, other.fc3_b);
  axpy(out_w.data, other.out_w.data);
  axpy(out_b, other.out_b);
}

void CnnGradients::scale(double factor) {
  for (auto* v : {&conv_w.data, &conv_b, &fc1_w.data, &fc1_b, &fc2_w.data, &fc2_b, &fc3_w.data,
                  &fc3_b, &out_w.data, &out_b})
    for (double& x : *v) x *= factor;
}

double cross_entropy(std::span<const double> probs, int target) {
  if (target < 0 || static_cast<std::size_t>(target) >= probs.size())
    throw ValidationError("cross_entropy: target out of range");
  return -std::log(std::max(probs[static_cast<std::size_t>(target)], 1e-300));
}

CnnGradients backward(const CnnModel& model, const ForwardCache& cache, int target) {
  const CnnConfig& cfg = model.config;
  if (!cache.train_mode)
    throw ValidationError("backward: cache must come from a train-mode forward pass");
  if (cache.probs.size() != static_cast<std::size_t>(cfg.n_classes) ||
      cache.pooled.size() != static_cast<std::size_t>(2 * cfg.n_filters) ||
      cache.input.rows != cfg.seq_len || cache.input.cols != cfg.embed_dim)
    throw ValidationError("backward: cache does not match the model");
  if (target < 0 || target >= cfg.n_classes)
    throw ValidationError("backward: target out of range");

  CnnGradients g = CnnGradients::zeros_like(model);

  std::vector<double> g_logits = cache.probs;
  g_logits[static_cast<std::size_t>(target)] -= 1.0;

  std::vector<double> g_fc3_act = fc_backward(model.out_w, cache.fc3_act, g_logits, g.out_w, g.out_b);
  std::vector<double> g_fc3_pre = crelu_backward(cache.fc3_pre, g_fc3_act);

  std::vector<double> g_fc2_act = fc_backward(model.fc3_w, cache.fc2_act, g_fc3_pre, g.fc3_w, g.fc3_b);
  std::vector<double> g_fc2_pre = crelu_backward(cache.fc2_pre, g_fc2_act);

  std::vector<double> g_fc1_dropped =
      fc_backward(model.fc2_w, cache.fc1_dropped, g_fc2_pre, g.fc2_w, g.fc2_b);
  std::vector<double> g_fc1_act(g_fc1_dropped.size());
  for (std::size_t i = 0; i < g_fc1_act.size(); ++i)
    g_fc1_act[i] = g_fc1_dropped[i] * cache.dropout_scale[i];
  std::vector<double> g_fc1_pre = crelu_backward(cache.fc1_pre, g_fc1_act);

  std::vector<double> g_pooled = fc_backward(model.fc1_w, cache.pooled, g_fc1_pre, g.fc1_w, g.fc1_b);

  // pooling routes each channel's gradient to its argmax position; CReLU
  // gates it on the sign of the pre-activation there
  const int F = cfg.n_filters;
  Matrix g_conv_pre(cache.conv_pre.rows, cache.conv_pre.cols);
  for (int c = 0; c < 2 * F; ++c) {
    const int f = c < F ? c : c - F;
    const int pos = cache.pool_src[static_cast<std::size_t>(c)];
    const double pre = cache.conv_pre.at(pos, f);
    if (c < F) {
      if (pre > 0.0) g_conv_pre.at(pos, f) += g_pooled[static_cast<std::size_t>(c)];
    } else {
      if (pre < 0.0) g_conv_pre.at(pos, f) -= g_pooled[static_cast<std::size_t>(c)];
    }
  }

  for (int p = 0; p < g_conv_pre.rows; ++p) {
    for (int f = 0; f < F; ++f) {
      const double gv = g_conv_pre.at(p, f);
      if (gv == 0.0) continue;
      g.conv_b[static_cast<std::size_t>(f)] += gv;
      double* gw = g.conv_w.data.data() + static_cast<std::size_t>(f) * g.conv_w.cols;
      for (int h = 0; h < cfg.filter_height; ++h) {
        const double* in_row =
            cache.input.data.data() + static_cast<std::size_t>(p + h) * cache.input.cols;
        double* gw_row = gw + static_cast<std::size_t>(h) * cfg.embed_dim;
        for (int d = 0; d < cfg.embed_dim; ++d) gw_row[d] += gv * in_row[d];
      }
    }
  }
  return g;
}

namespace {

struct ParamRef {
  std::vector<double>* value;
  const std::vector<double>* grad;
};

std::vector<ParamRef> param_refs(CnnModel& model, const CnnGradients& g) {
  return {
      {&model.conv_w.data, &g.conv_w.data}, {&model.conv_b, &g.conv_b},
      {&model.fc1_w.data, &g.fc1_w.data},   {&model.fc1_b, &g.fc1_b},
      {&model.fc2_w.data, &g.fc2_w.data},   {&model.fc2_b, &g.fc2_b},
      {&model.fc3_w.data, &g.fc3_w.data},   {&model.fc3_b, &g.fc3_b},
      {&model.out_w.data, &g.out_w.data},   {&model.out_b, &g.out_b},
  };
}

void add_l2(CnnGradients& g, const CnnModel& m, double l2) {
  auto add = [l2](std::vector<double>& gv, const std::vector<double>& wv) {
    for (std::size_t j = 0; j < gv.size(); ++j) gv[j] += l2 * wv[j];
  };
  add(g.conv_w.data, m.conv_w.data);
  add(g.fc1_w.data, m.fc1_w.data);
  add(g.fc2_w.data, m.fc2_w.data);
  add(g.fc3_w.data, m.fc3_w.data);
  add(g.out_w.data, m.out_w.data);
}

class AdamState {
 public:
  void step(std::vector<ParamRef>& params, double lr) {
    if (m_.empty()) {
      for (const auto& p : params) {
        m_.emplace_back(p.value->size(), 0.0);
        v_.emplace_back(p.value->size(), 0.0);
      }
    }
    ++t_;
    const double bc1 = 1.0 - std::pow(kBeta1, t_);
    const double bc2 = 1.0 - std::pow(kBeta2, t_);
    for (std::size_t i = 0; i < params.size(); ++i) {
      auto& value = *params[i].value;
      const auto& grad = *params[i].grad;
      for (std::size_t j = 0; j < value.size(); ++j) {
        m_[i][j] = kBeta1 * m_[i][j] + (1.0 - kBeta1) * grad[j];
        v_[i][j] = kBeta2 * v_[i][j] + (1.0 - kBeta2) * grad[j] * grad[j];
        value[j] -= lr * (m_[i][j] / bc1) / (std::sqrt(v_[i][j] / bc2) + kEps);
      }
    }
  }

 private:
  static constexpr double kBeta1 = 0.9;
  static constexpr double kBeta2 = 0.999;
  static constexpr double kEps = 1e-8;
  std::vector<std::vector<double>> m_, v_;
  long t_ = 0;
};

}  // namespace

TrainReport train(CnnModel& model, std::span<const TrainExample> dataset, const TrainConfig& cfg) {
  if (dataset.empty()) throw ValidationError("train: empty dataset");
  if (cfg.epochs < 1) throw ValidationError("train: epochs must be >= 1");
  if (cfg.learning_rate <= 0.0) throw ValidationError("train: learning_rate must be > 0");
  if (cfg.batch_size < 1) throw ValidationError("train: batch_size must be >= 1");
  for (const auto& ex : dataset)
    if (ex.label < 0 || ex.label >= model.config.n_classes)
      throw ValidationError("train: label out of range");

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), 0);

  AdamState adam;
  TrainReport report;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double epoch_loss = 0.0;

    for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
      const std::size_t end = std::min(order.size(), start + cfg.batch_size);
      CnnGradients batch_grad = CnnGradients::zeros_like(model);
      for (std::size_t i = start; i < end; ++i) {
        const TrainExample& ex = dataset[order[i]];
        ForwardResult fwd = forward(model, ex.input, /*train_mode=*/true, rng);
        epoch_loss += cross_entropy(fwd.probs, ex.label);
        batch_grad.accumulate(backward(model, fwd.cache, ex.label));
      }
      batch_grad.scale(1.0 / static_cast<double>(end - start));
      if (cfg.l2_weight > 0.0) add_l2(batch_grad, model, cfg.l2_weight);

      auto params = param_refs(model, batch_grad);
      if (cfg.optimizer == Optimizer::adaptive_moment) {
        adam.step(params, cfg.learning_rate);
      } else {
        for (auto& p : params)
          for (std::size_t j = 0; j < p.value->size(); ++j)
            (*p.value)[j] -= cfg.learning_rate * (*p.grad)[j];
      }
    }

    epoch_loss /= static_cast<double>(dataset.size());
    if (!std::isfinite(epoch_loss))
      throw NumericError("train: loss diverged at epoch " + std::to_string(epoch + 1));
    report.epoch_loss.push_back(epoch_loss);
  }
  return report;
}

double percentile_interpolated(std::vector<double> values, double q) {
  if (values.empty()) throw ValidationError("percentile: empty value set");
  if (q < 0.0 || q > 1.0) throw ValidationError("percentile: q must be in [0, 1]");
  std::sort(values.begin(), values.end());
  const double rank = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(rank);
  if (lo + 1 >= values.size()) return values.back();
  const double frac = rank - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

double predict_user(const CnnModel& model, std::span<const Matrix> documents) {
  if (documents.empty()) throw ValidationError("predict_user: no content for this user");
  std::vector<double> positives;
  positives.reserve(documents.size());
  for (const Matrix& doc : documents) positives.push_back(forward_eval(model, doc)[1]);
  return percentile_interpolated(std::move(positives), 0.98);
}

Matrix build_doc_matrix(const EmbeddingTable& table, std::span<const std::string> tokens,
                        int seq_len) {
  Matrix m(seq_len, table.dim());
  const std::size_t limit = std::min(tokens.size(), static_cast<std::size_t>(seq_len));
  for (std::size_t t = 0; t < limit; ++t) {
    auto vec = table.lookup(tokens[t]);
    if (!vec) continue;  // OOV tokens stay zero
    for (int d = 0; d < table.dim(); ++d)
      m.at(static_cast<int>(t), d) = static_cast<double>((*vec)[static_cast<std::size_t>(d)]);
  }
  return m;
}

namespace {

nlohmann::json tensor_json(const Matrix& m) {
  return {{"shape", {m.rows, m.cols}}, {"data", m.data}};
}
nlohmann::json tensor_json(const std::vector<double>& v) {
  return {{"shape", {v.size()}}, {"data", v}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  auto shape = j.at("shape").get<std::vector<int>>();
  if (shape.size() != 2) throw ParseError("cnn model: expected 2-d tensor");
  Matrix m(shape[0], shape[1]);
  auto data = j.at("data").get<std::vector<double>>();
  if (data.size() != m.data.size()) throw ParseError("cnn model: tensor size mismatch");
  m.data = std::move(data);
  return m;
}

std::vector<double> vector_from_json(const nlohmann::json& j) {
  return j.at("data").get<std::vector<double>>();
}

}  // namespace

std::string serialize_cnn(const CnnModel& model) {
  nlohmann::json j;
  j["config"] = {{"seq_len", model.config.seq_len},
                 {"embed_dim", model.config.embed_dim},
                 {"n_filters", model.config.n_filters},
                 {"filter_height", model.config.filter_height},
                 {"fc_sizes", model.config.fc_sizes},
                 {"dropout_rate", model.config.dropout_rate},
                 {"n_classes", model.config.n_classes},
                 {"seed", model.config.seed}};
  j["tensors"] = {{"conv_w", tensor_json(model.conv_w)}, {"conv_b", tensor_json(model.conv_b)},
                  {"fc1_w", tensor_json(model.fc1_w)},   {"fc1_b", tensor_json(model.fc1_b)},
                  {"fc2_w", tensor_json(model.fc2_w)},   {"fc2_b", tensor_json(model.fc2_b)},
                  {"fc3_w", tensor_json(model.fc3_w)},   {"fc3_b", tensor_json(model.fc3_b)},
                  {"out_w", tensor_json(model.out_w)},   {"out_b", tensor_json(model.out_b)}};
  return j.dump();
}

CnnModel deserialize_cnn(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cnn model: invalid JSON: ") + e.what());
  }
  CnnModel m;
  const auto& c = j.at("config");
  m.config.seq_len = c.at("seq_len").get<int>();
  m.config.embed_dim = c.at("embed_dim").get<int>();
  m.config.n_filters = c.at("n_filters").get<int>();
  m.config.filter_height = c.at("filter_height").get<int>();
  auto fc = c.at("fc_sizes").get<std::vector<int>>();
  if (fc.size() != 3) throw ParseError("cnn model: fc_sizes must have 3 entries");
  std::copy(fc.begin(), fc.end(), m.config.fc_sizes.begin());
  m.config.dropout_rate = c.at("dropout_rate").get<double>();
  m.config.n_classes = c.at("n_classes").get<int>();
  m.config.seed = c.at("seed").get<std::uint64_t>();
  m.config.validate();

  const auto& t = j.at("tensors");
  m.conv_w = matrix_from_json(t.at("conv_w"));
  m.conv_b = vector_from_json(t.at("conv_b"));
  m.fc1_w = matrix_from_json(t.at("fc1_w"));
  m.fc1_b = vector_from_json(t.at("fc1_b"));
  m.fc2_w = matrix_from_json(t.at("fc2_w"));
  m.fc2_b = vector_from_json(t.at("fc2_b"));
  m.fc3_w = matrix_from_json(t.at("fc3_w"));
  m.fc3_b = vector_from_json(t.at("fc3_b"));
  m.out_w = matrix_from_json(t.at("out_w"));
  m.out_b = vector_from_json(t.at("out_b"));
  for (double x : m.conv_w.data)
    if (!std::isfinite(x)) throw ParseError("cnn model: non-finite parameter");
  return m;
}

void write_loss_csv(const TrainReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write loss curve: " + path);
  out << "epoch,mean_loss\n";
  char buf[64];
  for (std::size_t i = 0; i < report.epoch_loss.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g", report.epoch_loss[i]);
    out << (i + 1) << ',' << buf << '\n';
  }
}

}  // namespace earlyrisk
