#include "earlyrisk/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "earlyrisk/errors.hpp"

namespace earlyrisk {

namespace {

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

void validate_log(const DecisionLog& log) {
  if (log.empty()) throw ValidationError("metrics: empty decision log");
  for (const auto& r : log) {
    if (r.truth != 0 && r.truth != 1)
      throw ValidationError("metrics: truth label must be 0 or 1 for " + r.user_id);
    if (r.predicted != 0 && r.predicted != 1)
      throw ValidationError("metrics: predicted label must be 0 or 1 for " + r.user_id);
    if (r.k < 1 || r.n_d < 1 || r.k > r.n_d)
      throw ValidationError("metrics: need 1 <= k <= n_d for " + r.user_id + " (k=" +
                            std::to_string(r.k) + ", n_d=" + std::to_string(r.n_d) + ")");
  }
}

std::string format2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

}  // namespace

std::string erde_variant_name(ErdeVariant variant) {
  switch (variant) {
    case ErdeVariant::sigmoid_absolute: return "sigmoid_absolute";
    case ErdeVariant::linear: return "linear";
    case ErdeVariant::sigmoid_percentage: return "sigmoid_percentage";
  }
  return "unknown";
}

double default_false_positive_cost(const DecisionLog& log) {
  validate_log(log);
  long positives = 0;
  for (const auto& r : log) positives += r.truth;
  return static_cast<double>(positives) / static_cast<double>(log.size());
}

double erde(const DecisionLog& log, const ErdeParams& params, ErdeVariant variant) {
  validate_log(log);
  if (params.c_fn < 0.0 || params.c_tp < 0.0 || (params.c_fp && *params.c_fp < 0.0))
    throw ValidationError("erde: costs must be >= 0");
  if (variant != ErdeVariant::linear && params.o <= 0.0)
    throw ValidationError("erde: o must be > 0");
  if (variant == ErdeVariant::sigmoid_percentage && (params.o < 0.0 || params.o > 100.0))
    throw ValidationError("erde: percentage variant needs o in [0, 100]");

  const double c_fp = params.c_fp ? *params.c_fp : default_false_positive_cost(log);

  double total = 0.0;
  for (const auto& r : log) {
    if (r.predicted == 1 && r.truth == 0) {
      total += c_fp;
    } else if (r.predicted == 0 && r.truth == 1) {
      total += params.c_fn;
    } else if (r.predicted == 1 && r.truth == 1) {
      double lc = 0.0;
      switch (variant) {
        case ErdeVariant::sigmoid_absolute:
          lc = sigmoid(static_cast<double>(r.k) - params.o);
          break;
        case ErdeVariant::linear:
          lc = static_cast<double>(r.k) / static_cast<double>(r.n_d);
          break;
        case ErdeVariant::sigmoid_percentage:
          lc = sigmoid(100.0 * static_cast<double>(r.k) / static_cast<double>(r.n_d) - params.o);
          break;
      }
      total += lc * params.c_tp;
    }
  }
  return 100.0 * total / static_cast<double>(log.size());
}

Prf prf(const DecisionLog& log) {
  validate_log(log);
  long tp = 0, fp = 0, fn = 0;
  for (const auto& r : log) {
    if (r.predicted == 1 && r.truth == 1) ++tp;
    if (r.predicted == 1 && r.truth == 0) ++fp;
    if (r.predicted == 0 && r.truth == 1) ++fn;
  }
  Prf out;
  out.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  out.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  out.f1 = out.precision + out.recall > 0.0
               ? 2.0 * out.precision * out.recall / (out.precision + out.recall)
               : 0.0;
  return out;
}

namespace {

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

long median_posts(const DecisionLog& log) {
  validate_log(log);
  std::vector<double> counts;
  counts.reserve(log.size());
  for (const auto& r : log) counts.push_back(static_cast<double>(r.n_d));
  return std::lround(median_of(std::move(counts)));
}

double f_latency(const DecisionLog& log, long dataset_median_posts) {
  validate_log(log);
  if (dataset_median_posts < 2)
    throw ValidationError("f_latency: dataset median posts must be >= 2");

  std::vector<double> tp_ks;
  for (const auto& r : log)
    if (r.truth == 1 && r.predicted == 1) tp_ks.push_back(static_cast<double>(r.k));
  if (tp_ks.empty()) return 0.0;

  const double latency = median_of(std::move(tp_ks));
  // growth rate chosen so the penalty is exactly 0.5 at the dataset median
  const double q = std::log(3.0) / (static_cast<double>(dataset_median_posts) - 1.0);
  const double penalty = -1.0 + 2.0 / (1.0 + std::exp(-q * (latency - 1.0)));
  return prf(log).f1 * (1.0 - penalty);
}

MetricReport compute_report(const DecisionLog& log, std::span<const ErdeSpec> erde_specs,
                            const ErdeParams& base_params,
                            std::optional<long> dataset_median_posts) {
  validate_log(log);

  MetricReport report;
  report.n_users = static_cast<long>(log.size());
  for (const auto& r : log) {
    if (r.predicted == 1 && r.truth == 1) ++report.n_tp;
    if (r.predicted == 1 && r.truth == 0) ++report.n_fp;
    if (r.predicted == 0 && r.truth == 1) ++report.n_fn;
    if (r.predicted == 0 && r.truth == 0) ++report.n_tn;
  }
  const Prf scores = prf(log);
  report.precision = scores.precision;
  report.recall = scores.recall;
  report.f1 = scores.f1;

  for (const auto& spec : erde_specs) {
    ErdeParams params = base_params;
    params.o = spec.o;
    report.erde.push_back({spec.variant, spec.o, erde(log, params, spec.variant)});
  }

  const long median = dataset_median_posts ? *dataset_median_posts : median_posts(log);
  if (median >= 2) {
    report.f_latency = f_latency(log, median);
    if (report.n_tp == 0)
      report.warnings.push_back("f_latency: no true positives, latency factor undefined, score 0");
  } else {
    report.f_latency = 0.0;
    report.warnings.push_back("f_latency skipped: dataset median posts < 2");
  }
  return report;
}

std::string metric_report_json(const MetricReport& report) {
  nlohmann::json j;
  j["counts"] = {{"tp", report.n_tp},
                 {"fp", report.n_fp},
                 {"fn", report.n_fn},
                 {"tn", report.n_tn},
                 {"users", report.n_users}};
  j["precision"] = report.precision;
  j["recall"] = report.recall;
  j["f1"] = report.f1;
  j["f_latency"] = report.f_latency;
  nlohmann::json erde_json = nlohmann::json::array();
  for (const auto& e : report.erde)
    erde_json.push_back(
        {{"variant", erde_variant_name(e.variant)}, {"o", e.o}, {"score_pct", e.score_pct}});
  j["erde"] = std::move(erde_json);
  j["warnings"] = report.warnings;
  return j.dump(2);
}

namespace {

std::string erde_column_name(const ErdeEntry& e) {
  char buf[64];
  switch (e.variant) {
    case ErdeVariant::sigmoid_absolute:
      std::snprintf(buf, sizeof(buf), "ERDE_%g", e.o);
      break;
    case ErdeVariant::sigmoid_percentage:
      std::snprintf(buf, sizeof(buf), "ERDE_%g%%", e.o);
      break;
    case ErdeVariant::linear:
      std::snprintf(buf, sizeof(buf), "ERDE_linear");
      break;
  }
  return buf;
}

}  // namespace

std::string metric_report_text(const MetricReport& report) {
  std::ostringstream os;
  os << "users: " << report.n_users << " (tp " << report.n_tp << ", fp " << report.n_fp
     << ", fn " << report.n_fn << ", tn " << report.n_tn << ")\n";
  for (const auto& e : report.erde)
    os << erde_column_name(e) << ": " << format2(e.score_pct) << "%\n";
  os << "precision: " << format2(report.precision) << "\n";
  os << "recall: " << format2(report.recall) << "\n";
  os << "f1: " << format2(report.f1) << "\n";
  os << "f_latency: " << format2(report.f_latency) << "\n";
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
  return os.str();
}

void write_decision_csv(const DecisionLog& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write decision log: " + path);
  out << "user_id,truth,predicted,k,n_d\n";
  for (const auto& r : log)
    out << r.user_id << ',' << r.truth << ',' << r.predicted << ',' << r.k << ',' << r.n_d << '\n';
  if (!out) throw IoError("write failed: " + path);
}

DecisionLog read_decision_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open decision log: " + path);

  DecisionLog log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("user_id,", 0) == 0) continue;

    std::istringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 5)
      throw ParseError("decision log line " + std::to_string(line_no) + ": expected 5 fields");
    DecisionRecord r;
    r.user_id = fields[0];
    try {
      r.truth = std::stoi(fields[1]);
      r.predicted = std::stoi(fields[2]);
      r.k = std::stol(fields[3]);
      r.n_d = std::stol(fields[4]);
    } catch (const std::exception&) {
      throw ParseError("decision log line " + std::to_string(line_no) + ": bad integer field");
    }
    log.push_back(std::move(r));
  }
  return log;
}

std::string comparison_csv(std::span<const ComparisonRow> rows) {
  std::ostringstream os;
  os << "model,threshold";
  if (!rows.empty())
    for (const auto& e : rows.front().report.erde) os << ',' << erde_column_name(e);
  os << ",f1,precision,recall,f_latency\n";
  for (const auto& row : rows) {
    os << row.model << ',' << format2(row.threshold);
    for (const auto& e : row.report.erde) os << ',' << format2(e.score_pct);
    os << ',' << format2(row.report.f1) << ',' << format2(row.report.precision) << ','
       << format2(row.report.recall) << ',' << format2(row.report.f_latency) << '\n';
  }
  return os.str();
}

}  // namespace earlyrisk
