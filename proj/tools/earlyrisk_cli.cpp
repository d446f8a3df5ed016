// Command-line front end: corpus generation and ingestion, feature
// extraction, model training, chunked simulation, scoring, and embedding
// queries. Every artifact-producing command drops a .manifest.json next to
// its outputs so runs can be audited and reproduced.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "earlyrisk/classifiers.hpp"
#include "earlyrisk/corpus.hpp"
#include "earlyrisk/embeddings.hpp"
#include "earlyrisk/errors.hpp"
#include "earlyrisk/metadata.hpp"
#include "earlyrisk/metrics.hpp"
#include "earlyrisk/neuralnet.hpp"
#include "earlyrisk/simulator.hpp"
#include "earlyrisk/textproc.hpp"

namespace er = earlyrisk;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// small helpers

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw er::IoError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw er::IoError("cannot write file: " + path);
  out << content;
  if (!out) throw er::IoError("write failed: " + path);
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string iso_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::istringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw er::ValidationError("bad numeric list entry: '" + item + "'");
    }
  }
  return out;
}

class ManifestWriter {
 public:
  ManifestWriter(std::string command, json config)
      : command_(std::move(command)), config_(std::move(config)), started_(iso_utc_now()),
        clock_start_(std::chrono::steady_clock::now()) {}

  void add_input(const std::string& path) {
    inputs_[path] = fnv1a64_hex(read_file(path));
  }
  void add_output(const std::string& path) { outputs_.push_back(path); }

  /// Writes <first output>.manifest.json.
  void write() const {
    if (outputs_.empty()) return;
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start_).count();
    json j;
    j["command"] = command_;
    j["config"] = config_;
    j["inputs"] = inputs_;
    j["outputs"] = outputs_;
    j["started_utc"] = started_;
    j["wall_clock_seconds"] = elapsed;
    write_file(outputs_.front() + ".manifest.json", j.dump(2) + "\n");
  }

 private:
  std::string command_;
  json config_;
  std::string started_;
  std::chrono::steady_clock::time_point clock_start_;
  std::map<std::string, std::string> inputs_;
  std::vector<std::string> outputs_;
};

// ---------------------------------------------------------------------------
// lexicons and predictors

struct LexiconOptions {
  std::string bundle_path;  // optional JSON bundle; overrides the built-ins

  er::LexiconBundle resolve() const {
    std::string path = bundle_path;
    if (path.empty()) {
      if (const char* env = std::getenv("EARLYRISK_LEXICONS")) path = env;
    }
    if (path.empty()) return {er::default_phrase_lexicon(), er::default_category_lexicon()};
    return er::load_lexicon_bundle(path);
  }
};

struct MetaModel {
  er::Standardizer standardizer;
  er::LogisticModel logistic;
  bool month_feature = true;

  static MetaModel load(const std::string& path) {
    json j;
    try {
      j = json::parse(read_file(path));
    } catch (const json::exception& e) {
      throw er::ParseError("metadata model " + path + ": " + e.what());
    }
    if (j.value("type", "") != "metadata_lr")
      throw er::ValidationError("metadata model " + path + ": wrong type field");
    MetaModel m;
    m.standardizer = er::Standardizer::deserialize(j.at("standardizer").dump());
    m.logistic = er::deserialize_logistic(j.at("logistic").dump());
    m.month_feature = j.value("month_feature", true);
    const auto& names = er::metadata_feature_names();
    if (!m.logistic.feature_order.empty() &&
        !std::equal(names.begin(), names.end(), m.logistic.feature_order.begin(),
                    m.logistic.feature_order.end()))
      throw er::ValidationError("metadata model " + path + ": feature order fingerprint mismatch");
    return m;
  }

  std::string serialize() const {
    json j;
    j["type"] = "metadata_lr";
    j["standardizer"] = json::parse(standardizer.serialize());
    j["logistic"] = json::parse(er::serialize_logistic(logistic));
    j["month_feature"] = month_feature;
    return j.dump(2) + "\n";
  }
};

er::UserPredictor make_meta_predictor(MetaModel model, er::LexiconBundle lexicons) {
  er::ExtractorConfig cfg;
  cfg.month_feature = model.month_feature;
  return [model = std::move(model), lexicons = std::move(lexicons), cfg](
             const er::UserRecord& user, std::size_t prefix_len) {
    const auto raw = er::extract_metadata(user, lexicons.phrases, lexicons.categories, cfg,
                                          prefix_len);
    const auto scaled = model.standardizer.apply(raw);
    return er::predict_logistic(model.logistic, scaled);
  };
}

/// Per-document CNN probabilities are pure, so they are computed once per
/// message and reused across the growing chunk prefixes.
class CnnPredictor {
 public:
  CnnPredictor(er::CnnModel model, er::EmbeddingTable table)
      : model_(std::move(model)), table_(std::move(table)) {}

  double operator()(const er::UserRecord& user, std::size_t prefix_len) const {
    std::vector<double>* probs = nullptr;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      probs = &cache_[user.user_id];
    }
    if (probs->empty()) probs->assign(user.messages.size(), -1.0);

    std::vector<double> collected;
    const std::size_t limit = std::min(prefix_len, user.messages.size());
    for (std::size_t m = 0; m < limit; ++m) {
      if (user.messages[m].is_empty()) continue;
      if ((*probs)[m] < 0.0) {
        const auto doc = er::tokenize(user.messages[m].text + "\n" + user.messages[m].title);
        const er::Matrix input =
            er::build_doc_matrix(table_, doc.tokens, model_.config.seq_len);
        (*probs)[m] = er::forward_eval(model_, input)[1];
      }
      collected.push_back((*probs)[m]);
    }
    if (collected.empty())
      throw er::ValidationError("cnn predictor: no content for user " + user.user_id);
    return er::percentile_interpolated(std::move(collected), 0.98);
  }

 private:
  er::CnnModel model_;
  er::EmbeddingTable table_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, std::vector<double>> cache_;
};

er::UserPredictor make_ensemble(er::UserPredictor a, er::UserPredictor b) {
  return [a = std::move(a), b = std::move(b)](const er::UserRecord& user, std::size_t prefix) {
    er::UserPrediction pa{user.user_id, a(user, prefix), er::PredictionSource::metadata};
    er::UserPrediction pb{user.user_id, b(user, prefix), er::PredictionSource::cnn};
    return er::fuse(pa, pb).probability;
  };
}

std::vector<er::ErdeSpec> build_erde_specs(const std::string& erde_list,
                                           const std::string& erde_pct_list) {
  std::vector<er::ErdeSpec> specs;
  for (double o : parse_double_list(erde_list))
    specs.push_back({er::ErdeVariant::sigmoid_absolute, o});
  for (double o : parse_double_list(erde_pct_list))
    specs.push_back({er::ErdeVariant::sigmoid_percentage, o});
  return specs;
}

void print_report(const er::MetricReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << er::metric_report_json(report) << "\n";
  } else if (format == "csv") {
    er::ComparisonRow row{"run", 0.0, report};
    std::cout << er::comparison_csv(std::span<const er::ComparisonRow>(&row, 1));
  } else {
    std::cout << er::metric_report_text(report);
  }
}

// ---------------------------------------------------------------------------
// subcommand implementations

struct GenCorpusArgs {
  int positives = 0;
  int negatives = 0;
  std::uint64_t seed = 42;
  std::string out;
  er::GeneratorProfile profile;
};

int run_gen_corpus(const GenCorpusArgs& args) {
  ManifestWriter manifest("gen-corpus", json{{"positives", args.positives},
                                             {"negatives", args.negatives},
                                             {"seed", args.seed},
                                             {"min_messages", args.profile.min_messages},
                                             {"max_messages", args.profile.max_messages},
                                             {"message_step", args.profile.message_step},
                                             {"signal_rate", args.profile.signal_rate},
                                             {"empty_message_rate", args.profile.empty_message_rate},
                                             {"timestamp_leak", args.profile.timestamp_leak}});
  const auto users =
      er::generate_synthetic_corpus(args.positives, args.negatives, args.seed, args.profile);
  er::save_corpus(users, args.out);
  manifest.add_output(args.out);
  manifest.write();
  std::cout << "wrote " << users.size() << " users to " << args.out << "\n";
  return 0;
}

struct ExtractArgs {
  std::string corpus;
  std::string out;
  bool no_month = false;
  LexiconOptions lexicons;
};

int run_extract_features(const ExtractArgs& args) {
  ManifestWriter manifest("extract-features",
                          json{{"corpus", args.corpus}, {"month_feature", !args.no_month}});
  manifest.add_input(args.corpus);

  const auto users = er::load_corpus(args.corpus, /*require_labels=*/false);
  const auto lexicons = args.lexicons.resolve();
  er::ExtractorConfig cfg;
  cfg.month_feature = !args.no_month;

  std::vector<er::MetadataVector> vectors;
  vectors.reserve(users.size());
  for (const auto& user : users)
    vectors.push_back(er::extract_metadata(user, lexicons.phrases, lexicons.categories, cfg));
  er::write_feature_csv(users, vectors, args.out);
  manifest.add_output(args.out);
  manifest.write();
  std::cout << "wrote " << vectors.size() << " feature vectors to " << args.out << "\n";
  return 0;
}

struct TrainMetaArgs {
  std::string train;
  std::string out;
  double learning_rate = 0.1;
  int epochs = 500;
  double l2 = 1e-4;
  std::uint64_t seed = 42;
  bool no_month = false;
  LexiconOptions lexicons;
};

int run_train_meta(const TrainMetaArgs& args) {
  ManifestWriter manifest("train-meta", json{{"train", args.train},
                                             {"learning_rate", args.learning_rate},
                                             {"epochs", args.epochs},
                                             {"l2_weight", args.l2},
                                             {"seed", args.seed},
                                             {"month_feature", !args.no_month}});
  manifest.add_input(args.train);

  const auto users = er::load_corpus(args.train);
  const auto lexicons = args.lexicons.resolve();
  er::ExtractorConfig ecfg;
  ecfg.month_feature = !args.no_month;

  std::vector<er::MetadataVector> vectors;
  std::vector<int> labels;
  vectors.reserve(users.size());
  for (const auto& user : users) {
    vectors.push_back(er::extract_metadata(user, lexicons.phrases, lexicons.categories, ecfg));
    labels.push_back(user.label);
  }

  MetaModel model;
  model.month_feature = ecfg.month_feature;
  model.standardizer = er::Standardizer::fit(vectors);

  std::vector<std::vector<double>> scaled;
  scaled.reserve(vectors.size());
  for (const auto& v : vectors) {
    const auto s = model.standardizer.apply(v);
    scaled.emplace_back(s.begin(), s.end());
  }
  er::LogisticTrainConfig tcfg;
  tcfg.learning_rate = args.learning_rate;
  tcfg.epochs = args.epochs;
  tcfg.l2_weight = args.l2;
  tcfg.seed = args.seed;
  model.logistic = er::train_logistic(scaled, labels, tcfg);
  model.logistic.feature_order.assign(er::metadata_feature_names().begin(),
                                      er::metadata_feature_names().end());

  write_file(args.out, model.serialize());
  manifest.add_output(args.out);
  manifest.write();
  std::cout << "trained metadata model on " << users.size() << " users -> " << args.out << "\n";
  return 0;
}

struct TrainCnnArgs {
  std::string train;
  std::string vectors;
  std::string out;
  std::string loss_csv;
  std::size_t vocab_limit = 0;
  int max_docs_per_user = 20;
  er::CnnConfig cnn;
  er::TrainConfig tcfg;
  std::string optimizer = "adam";
};

int run_train_cnn(TrainCnnArgs& args) {
  ManifestWriter manifest("train-cnn", json{{"train", args.train},
                                            {"vectors", args.vectors},
                                            {"seq_len", args.cnn.seq_len},
                                            {"n_filters", args.cnn.n_filters},
                                            {"dropout_rate", args.cnn.dropout_rate},
                                            {"optimizer", args.optimizer},
                                            {"learning_rate", args.tcfg.learning_rate},
                                            {"batch_size", args.tcfg.batch_size},
                                            {"epochs", args.tcfg.epochs},
                                            {"l2_weight", args.tcfg.l2_weight},
                                            {"max_docs_per_user", args.max_docs_per_user},
                                            {"seed", args.tcfg.seed}});
  manifest.add_input(args.train);
  manifest.add_input(args.vectors);

  const auto users = er::load_corpus(args.train);
  const auto table = er::load_embeddings(
      args.vectors, args.vocab_limit > 0 ? std::optional<std::size_t>(args.vocab_limit)
                                         : std::nullopt);
  args.cnn.embed_dim = table.dim();
  args.cnn.seed = args.tcfg.seed;
  args.tcfg.optimizer =
      args.optimizer == "sgd" ? er::Optimizer::plain_sgd : er::Optimizer::adaptive_moment;

  std::vector<er::TrainExample> examples;
  for (const auto& user : users) {
    int taken = 0;
    for (const auto& msg : user.messages) {
      if (msg.is_empty()) continue;
      if (args.max_docs_per_user > 0 && taken >= args.max_docs_per_user) break;
      const auto doc = er::tokenize(msg.text + "\n" + msg.title);
      examples.push_back(
          {er::build_doc_matrix(table, doc.tokens, args.cnn.seq_len), user.label});
      ++taken;
    }
  }
  if (examples.empty()) throw er::ValidationError("train-cnn: no non-empty documents");

  er::CnnModel model = er::CnnModel::init(args.cnn);
  const er::TrainReport report = er::train(model, examples, args.tcfg);

  write_file(args.out, er::serialize_cnn(model) + "\n");
  manifest.add_output(args.out);
  if (!args.loss_csv.empty()) {
    er::write_loss_csv(report, args.loss_csv);
    manifest.add_output(args.loss_csv);
  }
  manifest.write();
  std::cout << "trained cnn on " << examples.size() << " documents, final loss "
            << report.epoch_loss.back() << " -> " << args.out << "\n";
  return 0;
}

struct SimulateArgs {
  std::string test;
  std::string meta_model;
  std::string cnn_model;
  std::string vectors;
  std::size_t vocab_limit = 0;
  std::string policy = "threshold";
  double threshold = 0.5;
  int chunks = 10;
  std::string out;
  std::string trace;
  std::string erde_list = "5,50";
  std::string erde_pct_list = "20,50";
  long median_posts_override = 0;
  int jobs = 1;
  std::string format = "text";
  LexiconOptions lexicons;
};

er::UserPredictor build_predictor(const SimulateArgs& args) {
  er::UserPredictor meta;
  er::UserPredictor cnn;
  if (!args.meta_model.empty())
    meta = make_meta_predictor(MetaModel::load(args.meta_model), args.lexicons.resolve());
  if (!args.cnn_model.empty()) {
    if (args.vectors.empty())
      throw er::ValidationError("simulate: --cnn-model needs --vectors");
    auto table = er::load_embeddings(
        args.vectors, args.vocab_limit > 0 ? std::optional<std::size_t>(args.vocab_limit)
                                           : std::nullopt);
    auto model = er::deserialize_cnn(read_file(args.cnn_model));
    auto predictor = std::make_shared<CnnPredictor>(std::move(model), std::move(table));
    cnn = [predictor](const er::UserRecord& user, std::size_t prefix) {
      return (*predictor)(user, prefix);
    };
  }
  if (meta && cnn) return make_ensemble(std::move(meta), std::move(cnn));
  if (meta) return meta;
  if (cnn) return cnn;
  throw er::ValidationError("simulate: need --meta-model and/or --cnn-model");
}

int run_simulate(const SimulateArgs& args) {
  ManifestWriter manifest("simulate", json{{"test", args.test},
                                           {"meta_model", args.meta_model},
                                           {"cnn_model", args.cnn_model},
                                           {"policy", args.policy},
                                           {"threshold", args.threshold},
                                           {"chunks", args.chunks},
                                           {"erde", args.erde_list},
                                           {"erde_pct", args.erde_pct_list},
                                           {"jobs", args.jobs}});
  manifest.add_input(args.test);
  if (!args.meta_model.empty()) manifest.add_input(args.meta_model);
  if (!args.cnn_model.empty()) manifest.add_input(args.cnn_model);

  const auto users = er::load_corpus(args.test, /*require_labels=*/false);
  const auto predictor = build_predictor(args);

  er::DecisionPolicy policy;
  policy.threshold = args.threshold;
  policy.mode = args.policy == "wait" ? er::DecisionPolicy::Mode::wait
                                      : er::DecisionPolicy::Mode::threshold;
  policy.n_chunks = args.chunks;

  const er::SimulationResult sim = er::run_simulation(users, predictor, policy, args.jobs);

  if (!args.out.empty()) {
    er::write_decision_csv(sim.log, args.out);
    manifest.add_output(args.out);
  }
  if (!args.trace.empty()) {
    er::write_trace_jsonl(sim.trace, args.trace);
    manifest.add_output(args.trace);
  }
  manifest.write();

  const bool labeled = std::all_of(users.begin(), users.end(),
                                   [](const er::UserRecord& u) { return u.has_label(); });
  if (labeled) {
    const auto specs = build_erde_specs(args.erde_list, args.erde_pct_list);
    const auto report = er::compute_report(
        sim.log, specs, {},
        args.median_posts_override > 0 ? std::optional<long>(args.median_posts_override)
                                       : std::nullopt);
    print_report(report, args.format);
  } else {
    std::cout << "corpus is unlabeled: decisions written, no metrics computed\n";
  }
  return 0;
}

struct SweepArgs {
  SimulateArgs base;
  std::string thresholds = "0.5";
  std::string out;
};

int run_sweep(const SweepArgs& args) {
  const auto users = er::load_corpus(args.base.test);
  const auto predictor = build_predictor(args.base);
  const auto specs = build_erde_specs(args.base.erde_list, args.base.erde_pct_list);
  const auto thresholds = parse_double_list(args.thresholds);
  const auto mode = args.base.policy == "wait" ? er::DecisionPolicy::Mode::wait
                                               : er::DecisionPolicy::Mode::threshold;

  const auto rows =
      er::sweep_thresholds(users, predictor, thresholds, specs, {}, mode, args.base.jobs);

  std::vector<er::ComparisonRow> table;
  table.reserve(rows.size());
  for (const auto& row : rows) table.push_back({"sweep", row.threshold, row.report});
  const std::string csv = er::comparison_csv(table);

  if (args.base.format == "json") {
    json out = json::array();
    for (const auto& row : rows)
      out.push_back({{"threshold", row.threshold},
                     {"report", json::parse(er::metric_report_json(row.report))}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << csv;
    if (args.base.format == "text" && !rows.empty()) {
      const auto best_f1 = std::max_element(rows.begin(), rows.end(),
                                            [](const er::SweepRow& a, const er::SweepRow& b) {
                                              return a.report.f1 < b.report.f1;
                                            });
      std::cout << "# best f1 at threshold " << best_f1->threshold << "\n";
      for (std::size_t e = 0; e < rows.front().report.erde.size(); ++e) {
        const auto best = std::min_element(rows.begin(), rows.end(),
                                           [e](const er::SweepRow& a, const er::SweepRow& b) {
                                             return a.report.erde[e].score_pct <
                                                    b.report.erde[e].score_pct;
                                           });
        std::cout << "# best " << er::erde_variant_name(best->report.erde[e].variant) << " o="
                  << best->report.erde[e].o << " at threshold " << best->threshold << "\n";
      }
    }
  }
  if (!args.out.empty()) {
    ManifestWriter manifest("sweep", json{{"test", args.base.test},
                                          {"thresholds", args.thresholds},
                                          {"policy", args.base.policy}});
    manifest.add_input(args.base.test);
    write_file(args.out, csv);
    manifest.add_output(args.out);
    manifest.write();
  }
  return 0;
}

struct ScoreArgs {
  std::string log;
  std::string erde_list = "5,50";
  std::string erde_pct_list = "20,50";
  long median_posts_override = 0;
  double c_fp = -1.0;
  double c_fn = 1.0;
  double c_tp = 1.0;
  std::string format = "text";
};

int run_score(const ScoreArgs& args) {
  const auto log = er::read_decision_csv(args.log);
  const auto specs = build_erde_specs(args.erde_list, args.erde_pct_list);
  er::ErdeParams params;
  params.c_fn = args.c_fn;
  params.c_tp = args.c_tp;
  if (args.c_fp >= 0.0) params.c_fp = args.c_fp;
  const auto report = er::compute_report(
      log, specs, params,
      args.median_posts_override > 0 ? std::optional<long>(args.median_posts_override)
                                     : std::nullopt);
  print_report(report, args.format);
  return 0;
}

struct EmbedNnArgs {
  std::string vectors;
  std::string token;
  std::size_t k = 10;
  std::size_t vocab_limit = 0;
  std::string format = "text";
};

int run_embed_nn(const EmbedNnArgs& args) {
  const auto table = er::load_embeddings(
      args.vectors,
      args.vocab_limit > 0 ? std::optional<std::size_t>(args.vocab_limit) : std::nullopt);
  const auto neighbors = er::nearest_neighbors(table, args.token, args.k);
  if (args.format == "json") {
    json j = json::array();
    for (const auto& n : neighbors) j.push_back({{"token", n.token}, {"cosine", n.cosine}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& n : neighbors) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", n.cosine);
      std::cout << n.token << '\t' << buf << "\n";
    }
  }
  return 0;
}

struct EmbedAnalogyArgs {
  std::string vectors;
  std::string questions;
  std::size_t vocab_limit = 0;
  std::string format = "text";
};

int run_embed_analogy(const EmbedAnalogyArgs& args) {
  const auto table = er::load_embeddings(
      args.vectors,
      args.vocab_limit > 0 ? std::optional<std::size_t>(args.vocab_limit) : std::nullopt);
  const auto dataset = er::AnalogyDataset::load(args.questions);
  const auto result = er::evaluate_analogies(table, dataset);
  if (args.format == "json") {
    json j;
    j["semantic"] = {{"attempted", result.semantic_attempted},
                     {"correct", result.semantic_correct},
                     {"accuracy", result.semantic_accuracy()},
                     {"percent", result.semantic_pct()}};
    j["syntactic"] = {{"attempted", result.syntactic_attempted},
                      {"correct", result.syntactic_correct},
                      {"accuracy", result.syntactic_accuracy()},
                      {"percent", result.syntactic_pct()}};
    j["total_percent"] = result.total_pct();
    j["skipped"] = result.skipped;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "semantic: " << result.semantic_pct() << "% (" << result.semantic_correct << "/"
              << result.semantic_attempted << ")\n";
    std::cout << "syntactic: " << result.syntactic_pct() << "% (" << result.syntactic_correct
              << "/" << result.syntactic_attempted << ")\n";
    std::cout << "total: " << result.total_pct() << "%\n";
    std::cout << "skipped (out of vocabulary): " << result.skipped << "\n";
  }
  return 0;
}

struct AuditArgs {
  std::string train;
  std::string test;
  double warn_threshold = 0.6;
  std::string format = "text";
};

int run_audit_leak(const AuditArgs& args) {
  const auto train = er::load_corpus(args.train);
  const auto test = er::load_corpus(args.test);
  const auto report = er::audit_timestamp_leak(train, test, args.warn_threshold);
  if (args.format == "json") {
    json j;
    j["f1"] = report.f1;
    j["precision"] = report.precision;
    j["recall"] = report.recall;
    j["rule"] = report.rule_description();
    j["warn_threshold"] = report.warn_threshold;
    j["warning"] = report.warning;
    std::cout << j.dump(2) << "\n";
  } else {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", report.f1);
    std::cout << "last-timestamp classifier test F1: " << buf << "\n";
    std::cout << "rule: " << report.rule_description() << "\n";
    if (report.warning)
      std::cout << "WARNING: timestamps leak the label (F1 > "
                << report.warn_threshold << "); discard them for modeling\n";
    else
      std::cout << "no timestamp leak detected (threshold " << report.warn_threshold << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"early risk detection toolkit: corpora, features, models, chunked evaluation"};
  app.require_subcommand(1);

  GenCorpusArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-corpus", "generate a labeled synthetic corpus");
  gen_cmd->add_option("--positives", gen.positives, "number of risk users")->required();
  gen_cmd->add_option("--negatives", gen.negatives, "number of control users")->required();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "output JSONL path")->required();
  gen_cmd->add_option("--min-messages", gen.profile.min_messages);
  gen_cmd->add_option("--max-messages", gen.profile.max_messages);
  gen_cmd->add_option("--message-step", gen.profile.message_step,
                      "snap message counts down to multiples of this");
  gen_cmd->add_option("--signal-rate", gen.profile.signal_rate);
  gen_cmd->add_option("--empty-rate", gen.profile.empty_message_rate);
  gen_cmd->add_flag("--timestamp-leak", gen.profile.timestamp_leak,
                    "plant the collection-time label leak");

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract-features", "write the 27-column feature CSV");
  extract_cmd->add_option("--corpus", extract.corpus)->required();
  extract_cmd->add_option("--out", extract.out)->required();
  extract_cmd->add_flag("--no-month", extract.no_month, "neutralize the month feature");
  extract_cmd->add_option("--lexicons", extract.lexicons.bundle_path, "lexicon bundle JSON");

  TrainMetaArgs train_meta;
  auto* train_meta_cmd =
      app.add_subcommand("train-meta", "fit standardizer + logistic regression on metadata");
  train_meta_cmd->add_option("--train", train_meta.train)->required();
  train_meta_cmd->add_option("--out", train_meta.out)->required();
  train_meta_cmd->add_option("--lr", train_meta.learning_rate);
  train_meta_cmd->add_option("--epochs", train_meta.epochs);
  train_meta_cmd->add_option("--l2", train_meta.l2);
  train_meta_cmd->add_option("--seed", train_meta.seed);
  train_meta_cmd->add_flag("--no-month", train_meta.no_month);
  train_meta_cmd->add_option("--lexicons", train_meta.lexicons.bundle_path);

  TrainCnnArgs train_cnn;
  auto* train_cnn_cmd = app.add_subcommand("train-cnn", "train the document CNN");
  train_cnn_cmd->add_option("--train", train_cnn.train)->required();
  train_cnn_cmd->add_option("--vectors", train_cnn.vectors, "word vector file")->required();
  train_cnn_cmd->add_option("--out", train_cnn.out)->required();
  train_cnn_cmd->add_option("--loss-csv", train_cnn.loss_csv);
  train_cnn_cmd->add_option("--limit", train_cnn.vocab_limit, "vocabulary cap");
  train_cnn_cmd->add_option("--max-docs-per-user", train_cnn.max_docs_per_user);
  train_cnn_cmd->add_option("--seq-len", train_cnn.cnn.seq_len);
  train_cnn_cmd->add_option("--filters", train_cnn.cnn.n_filters);
  train_cnn_cmd->add_option("--dropout", train_cnn.cnn.dropout_rate);
  train_cnn_cmd->add_option("--optimizer", train_cnn.optimizer)
      ->check(CLI::IsMember({"sgd", "adam"}));
  train_cnn_cmd->add_option("--lr", train_cnn.tcfg.learning_rate);
  train_cnn_cmd->add_option("--batch", train_cnn.tcfg.batch_size);
  train_cnn_cmd->add_option("--epochs", train_cnn.tcfg.epochs);
  train_cnn_cmd->add_option("--l2", train_cnn.tcfg.l2_weight);
  train_cnn_cmd->add_option("--seed", train_cnn.tcfg.seed);

  SimulateArgs simulate;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "run the chunked sequential-release evaluation");
  simulate_cmd->add_option("--test", simulate.test)->required();
  simulate_cmd->add_option("--meta-model", simulate.meta_model);
  simulate_cmd->add_option("--cnn-model", simulate.cnn_model);
  simulate_cmd->add_option("--vectors", simulate.vectors);
  simulate_cmd->add_option("--limit", simulate.vocab_limit);
  simulate_cmd->add_option("--policy", simulate.policy)
      ->check(CLI::IsMember({"threshold", "wait"}));
  simulate_cmd->add_option("--threshold", simulate.threshold);
  simulate_cmd->add_option("--chunks", simulate.chunks);
  simulate_cmd->add_option("--out", simulate.out, "decision log CSV");
  simulate_cmd->add_option("--trace", simulate.trace, "per-chunk trace JSONL");
  simulate_cmd->add_option("--erde", simulate.erde_list, "absolute ERDE o values");
  simulate_cmd->add_option("--erde-pct", simulate.erde_pct_list, "percentage ERDE o values");
  simulate_cmd->add_option("--median-posts", simulate.median_posts_override);
  simulate_cmd->add_option("--jobs", simulate.jobs);
  simulate_cmd->add_option("--format", simulate.format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  simulate_cmd->add_option("--lexicons", simulate.lexicons.bundle_path);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "one simulation per threshold");
  sweep_cmd->add_option("--test", sweep.base.test)->required();
  sweep_cmd->add_option("--meta-model", sweep.base.meta_model);
  sweep_cmd->add_option("--cnn-model", sweep.base.cnn_model);
  sweep_cmd->add_option("--vectors", sweep.base.vectors);
  sweep_cmd->add_option("--limit", sweep.base.vocab_limit);
  sweep_cmd->add_option("--policy", sweep.base.policy)
      ->check(CLI::IsMember({"threshold", "wait"}));
  sweep_cmd->add_option("--thresholds", sweep.thresholds, "comma-separated list")->required();
  sweep_cmd->add_option("--erde", sweep.base.erde_list);
  sweep_cmd->add_option("--erde-pct", sweep.base.erde_pct_list);
  sweep_cmd->add_option("--jobs", sweep.base.jobs);
  sweep_cmd->add_option("--out", sweep.out, "comparison table CSV");
  sweep_cmd->add_option("--format", sweep.base.format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sweep_cmd->add_option("--lexicons", sweep.base.lexicons.bundle_path);

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "metrics from a decision log CSV");
  score_cmd->add_option("--log", score.log)->required();
  score_cmd->add_option("--erde", score.erde_list);
  score_cmd->add_option("--erde-pct", score.erde_pct_list);
  score_cmd->add_option("--median-posts", score.median_posts_override);
  score_cmd->add_option("--c-fp", score.c_fp, "override the default positives/users cost");
  score_cmd->add_option("--c-fn", score.c_fn);
  score_cmd->add_option("--c-tp", score.c_tp);
  score_cmd->add_option("--format", score.format)->check(CLI::IsMember({"json", "csv", "text"}));

  EmbedNnArgs embed_nn;
  auto* embed_nn_cmd = app.add_subcommand("embed-nn", "cosine nearest neighbors of a token");
  embed_nn_cmd->add_option("--vectors", embed_nn.vectors)->required();
  embed_nn_cmd->add_option("--token", embed_nn.token)->required();
  embed_nn_cmd->add_option("-k,--k", embed_nn.k);
  embed_nn_cmd->add_option("--limit", embed_nn.vocab_limit);
  embed_nn_cmd->add_option("--format", embed_nn.format)
      ->check(CLI::IsMember({"json", "text"}));

  EmbedAnalogyArgs embed_analogy;
  auto* embed_analogy_cmd = app.add_subcommand("embed-analogy", "word analogy benchmark");
  embed_analogy_cmd->add_option("--vectors", embed_analogy.vectors)->required();
  embed_analogy_cmd->add_option("--questions", embed_analogy.questions)->required();
  embed_analogy_cmd->add_option("--limit", embed_analogy.vocab_limit);
  embed_analogy_cmd->add_option("--format", embed_analogy.format)
      ->check(CLI::IsMember({"json", "text"}));

  AuditArgs audit;
  auto* audit_cmd =
      app.add_subcommand("audit-leak", "check whether timestamps alone predict the label");
  audit_cmd->add_option("--train", audit.train)->required();
  audit_cmd->add_option("--test", audit.test)->required();
  audit_cmd->add_option("--warn-threshold", audit.warn_threshold);
  audit_cmd->add_option("--format", audit.format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen_cmd->parsed()) return run_gen_corpus(gen);
    if (extract_cmd->parsed()) return run_extract_features(extract);
    if (train_meta_cmd->parsed()) return run_train_meta(train_meta);
    if (train_cnn_cmd->parsed()) return run_train_cnn(train_cnn);
    if (simulate_cmd->parsed()) return run_simulate(simulate);
    if (sweep_cmd->parsed()) return run_sweep(sweep);
    if (score_cmd->parsed()) return run_score(score);
    if (embed_nn_cmd->parsed()) return run_embed_nn(embed_nn);
    if (embed_analogy_cmd->parsed()) return run_embed_analogy(embed_analogy);
    if (audit_cmd->parsed()) return run_audit_leak(audit);
  } catch (const er::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const er::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
