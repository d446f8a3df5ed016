#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace earlyrisk {

/// One final verdict: what was predicted for a user and after how many of
/// that user's messages.
struct DecisionRecord {
  std::string user_id;
  int truth = 0;      // 1 = risk
  int predicted = 0;  // 1 = risk
  long k = 1;         // messages read at decision time
  long n_d = 1;       // total messages of this user
};

using DecisionLog = std::vector<DecisionRecord>;

enum class ErdeVariant {
  sigmoid_absolute,   // cost sigmoid centered at o messages read
  linear,             // cost k / n_d, no free parameter
  sigmoid_percentage, // cost sigmoid centered at o percent read
};

std::string erde_variant_name(ErdeVariant variant);

struct ErdeParams {
  double o = 50.0;
  double c_fn = 1.0;
  double c_tp = 1.0;
  /// Unset means the shared-task convention: positives in truth / all users.
  std::optional<double> c_fp;
};

/// positives-in-truth / n_users, the default false-positive cost.
double default_false_positive_cost(const DecisionLog& log);

/// Mean per-user decision cost in percent. True positives pay the late-cost
/// factor of the chosen variant, false positives c_fp, false negatives c_fn,
/// true negatives nothing.
double erde(const DecisionLog& log, const ErdeParams& params, ErdeVariant variant);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Positive class = risk. Zero-denominator cases score 0.
Prf prf(const DecisionLog& log);

/// F1 shrunk by a latency penalty that reaches 0.5 at the dataset median
/// post count; returns 0 when the log holds no true positives.
double f_latency(const DecisionLog& log, long dataset_median_posts);

/// Median total message count over the log's users (rounded to an integer).
long median_posts(const DecisionLog& log);

struct ErdeSpec {
  ErdeVariant variant = ErdeVariant::sigmoid_absolute;
  double o = 50.0;
};

struct ErdeEntry {
  ErdeVariant variant;
  double o;
  double score_pct;
};

struct MetricReport {
  long n_tp = 0, n_fp = 0, n_fn = 0, n_tn = 0, n_users = 0;
  double precision = 0.0, recall = 0.0, f1 = 0.0;
  double f_latency = 0.0;
  std::vector<ErdeEntry> erde;
  std::vector<std::string> warnings;
};

MetricReport compute_report(const DecisionLog& log, std::span<const ErdeSpec> erde_specs,
                            const ErdeParams& base_params = {},
                            std::optional<long> dataset_median_posts = std::nullopt);

std::string metric_report_json(const MetricReport& report);
std::string metric_report_text(const MetricReport& report);

void write_decision_csv(const DecisionLog& log, const std::string& path);
DecisionLog read_decision_csv(const std::string& path);

/// One row per (model, threshold), columns laid out like the result tables:
/// model, threshold, ERDE scores, F1, precision, recall, latency-weighted F1.
struct ComparisonRow {
  std::string model;
  double threshold = 0.0;
  MetricReport report;
};

std::string comparison_csv(std::span<const ComparisonRow> rows);

}  // namespace earlyrisk
