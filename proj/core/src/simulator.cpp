#include "earlyrisk/simulator.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "earlyrisk/errors.hpp"

namespace earlyrisk {

void DecisionPolicy::validate() const {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw ValidationError("decision policy: threshold must lie strictly in (0, 1)");
  if (n_chunks < 1) throw ValidationError("decision policy: n_chunks must be >= 1");
}

namespace {

struct UserState {
  const UserRecord* user = nullptr;
  std::vector<std::size_t> cumulative;
  std::size_t first_content = 0;  // index of first non-empty message, or n
  bool decided = false;
  int verdict = 0;
  long k = 0;
  std::string note;
};

// Scores `targets` (indices into states) and writes into probs[target].
// Exceptions carry the offending user forward deterministically.
void score_users(const std::vector<UserState>& states, std::span<const std::size_t> targets,
                 const UserPredictor& predictor, std::size_t prefix_source, int jobs,
                 std::vector<double>& probs, int chunk) {
  struct Failure {
    std::size_t target_pos;
    std::exception_ptr error;
  };

  auto score_range = [&](std::size_t begin, std::size_t end,
                         std::optional<Failure>& failure) noexcept {
    for (std::size_t t = begin; t < end; ++t) {
      const std::size_t u = targets[t];
      try {
        const std::size_t prefix = states[u].cumulative[prefix_source];
        probs[u] = predictor(*states[u].user, prefix);
      } catch (...) {
        failure = Failure{t, std::current_exception()};
        return;
      }
    }
  };

  std::optional<Failure> failure;
  if (jobs <= 1 || targets.size() < 2) {
    score_range(0, targets.size(), failure);
  } else {
    const std::size_t n_threads = std::min<std::size_t>(jobs, targets.size());
    std::vector<std::optional<Failure>> failures(n_threads);
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (std::size_t w = 0; w < n_threads; ++w) {
      const std::size_t begin = targets.size() * w / n_threads;
      const std::size_t end = targets.size() * (w + 1) / n_threads;
      threads.emplace_back([&, begin, end, w] { score_range(begin, end, failures[w]); });
    }
    for (auto& t : threads) t.join();
    for (auto& f : failures) {
      if (f && (!failure || f->target_pos < failure->target_pos)) failure = f;
    }
  }
  if (failure) {
    const std::size_t u = targets[failure->target_pos];
    try {
      std::rethrow_exception(failure->error);
    } catch (const std::exception& e) {
      throw ValidationError("predictor failed for user " + states[u].user->user_id +
                            " at chunk " + std::to_string(chunk) + ": " + e.what());
    }
  }
}

}  // namespace

SimulationResult run_simulation(std::span<const UserRecord> users, const UserPredictor& predictor,
                                const DecisionPolicy& policy, int jobs) {
  policy.validate();
  if (!predictor) throw ValidationError("run_simulation: no predictor");

  std::vector<UserState> states(users.size());
  for (std::size_t i = 0; i < users.size(); ++i) {
    states[i].user = &users[i];
    states[i].cumulative = chunk_user(users[i], policy.n_chunks).cumulative_counts;
    states[i].first_content = users[i].messages.size();
    for (std::size_t m = 0; m < users[i].messages.size(); ++m) {
      if (!users[i].messages[m].is_empty()) {
        states[i].first_content = m;
        break;
      }
    }
  }

  SimulationResult result;
  std::vector<double> probs(users.size(), 0.0);

  for (int chunk = 1; chunk <= policy.n_chunks; ++chunk) {
    const bool final_chunk = chunk == policy.n_chunks;
    if (policy.mode == DecisionPolicy::Mode::wait && !final_chunk) continue;

    std::vector<std::size_t> scorable;
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i].decided) continue;
      const std::size_t prefix = states[i].cumulative[static_cast<std::size_t>(chunk - 1)];
      if (states[i].first_content < prefix) scorable.push_back(i);
    }
    score_users(states, scorable, predictor, static_cast<std::size_t>(chunk - 1), jobs, probs,
                chunk);

    std::size_t next_scorable = 0;
    for (std::size_t i = 0; i < states.size(); ++i) {
      UserState& s = states[i];
      if (s.decided) continue;

      const bool has_content =
          next_scorable < scorable.size() && scorable[next_scorable] == i;

      TraceRow row;
      row.chunk = chunk;
      row.user_id = s.user->user_id;
      if (!has_content) {
        // nothing but empty messages so far: no verdict until forced
        if (final_chunk) {
          s.decided = true;
          s.verdict = 0;
          s.k = static_cast<long>(s.cumulative.back());
          s.note = "no non-empty messages, defaulted to negative";
          row.decided = true;
          row.verdict = s.verdict;
          row.k = s.k;
          row.note = s.note;
        } else {
          row.note = "empty prefix, skipped";
        }
        result.trace.push_back(std::move(row));
        continue;
      }
      ++next_scorable;

      const double p = probs[i];
      row.probability = p;
      const std::size_t read = s.cumulative[static_cast<std::size_t>(chunk - 1)];
      if (p > policy.threshold) {
        s.decided = true;
        s.verdict = 1;
        s.k = static_cast<long>(read);
      } else if (final_chunk) {
        s.decided = true;
        s.verdict = 0;
        s.k = static_cast<long>(read);
      }
      row.decided = s.decided;
      if (s.decided) {
        row.verdict = s.verdict;
        row.k = s.k;
      }
      result.trace.push_back(std::move(row));
    }
  }

  result.log.reserve(users.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    DecisionRecord r;
    r.user_id = users[i].user_id;
    r.truth = users[i].label;
    r.predicted = states[i].verdict;
    r.k = states[i].k;
    r.n_d = static_cast<long>(users[i].messages.size());
    result.log.push_back(std::move(r));
  }
  return result;
}

std::vector<SweepRow> sweep_thresholds(std::span<const UserRecord> users,
                                       const UserPredictor& predictor,
                                       std::span<const double> thresholds,
                                       std::span<const ErdeSpec> erde_specs,
                                       const ErdeParams& params, DecisionPolicy::Mode mode,
                                       int jobs) {
  if (thresholds.empty()) throw ValidationError("sweep_thresholds: empty threshold list");

  std::vector<double> sorted(thresholds.begin(), thresholds.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<SweepRow> rows;
  rows.reserve(sorted.size());
  for (double theta : sorted) {
    DecisionPolicy policy;
    policy.threshold = theta;
    policy.mode = mode;
    SimulationResult sim = run_simulation(users, predictor, policy, jobs);
    rows.push_back({theta, compute_report(sim.log, erde_specs, params)});
  }
  return rows;
}

void write_trace_jsonl(std::span<const TraceRow> trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write trace: " + path);
  for (const auto& row : trace) {
    nlohmann::json j;
    j["chunk"] = row.chunk;
    j["user_id"] = row.user_id;
    j["probability"] = row.probability ? nlohmann::json(*row.probability) : nlohmann::json();
    j["decided"] = row.decided;
    j["verdict"] = row.verdict ? nlohmann::json(*row.verdict) : nlohmann::json();
    j["k"] = row.k ? nlohmann::json(*row.k) : nlohmann::json();
    if (!row.note.empty()) j["note"] = row.note;
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace earlyrisk
