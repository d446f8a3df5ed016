#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "earlyrisk/corpus.hpp"
#include "earlyrisk/metrics.hpp"

namespace earlyrisk {

/// Probability of the risk class given the first `prefix_len` messages of a
/// user. Implementations must accept any non-empty prefix.
using UserPredictor = std::function<double(const UserRecord& user, std::size_t prefix_len)>;

struct DecisionPolicy {
  double threshold = 0.5;
  enum class Mode {
    threshold,  // positive as soon as probability > threshold
    wait,       // hold every verdict until the final chunk
  };
  Mode mode = Mode::threshold;
  int n_chunks = 10;

  void validate() const;
};

struct TraceRow {
  int chunk = 0;
  std::string user_id;
  std::optional<double> probability;
  bool decided = false;
  std::optional<int> verdict;
  std::optional<long> k;
  std::string note;
};

struct SimulationResult {
  DecisionLog log;
  std::vector<TraceRow> trace;
};

/// Sequential chunk release: at every chunk each undecided user is re-scored
/// on the cumulative prefix; positive verdicts are final the moment the
/// probability exceeds the threshold, negatives only fall at the last chunk.
/// Users whose prefix holds no content yet are skipped until it does.
/// Per-user scoring may use `jobs` threads; results are order-deterministic.
SimulationResult run_simulation(std::span<const UserRecord> users, const UserPredictor& predictor,
                                const DecisionPolicy& policy, int jobs = 1);

struct SweepRow {
  double threshold = 0.0;
  MetricReport report;
};

/// One full simulation per threshold, ascending.
std::vector<SweepRow> sweep_thresholds(std::span<const UserRecord> users,
                                       const UserPredictor& predictor,
                                       std::span<const double> thresholds,
                                       std::span<const ErdeSpec> erde_specs,
                                       const ErdeParams& params = {},
                                       DecisionPolicy::Mode mode = DecisionPolicy::Mode::threshold,
                                       int jobs = 1);

void write_trace_jsonl(std::span<const TraceRow> trace, const std::string& path);

}  // namespace earlyrisk
