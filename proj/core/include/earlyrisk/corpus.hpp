#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace earlyrisk {

/// One post or comment. A message may carry a title, a text body, or both;
/// fully empty messages are kept (they count as read) but carry no features.
struct Message {
  std::string title;
  std::string text;
  std::int64_t timestamp = 0;  // seconds since epoch, UTC

  bool is_empty() const { return title.empty() && text.empty(); }
};

constexpr int kUnlabeled = -1;

/// A subject: labeled, chronologically ordered message sequence.
struct UserRecord {
  std::string user_id;
  int label = kUnlabeled;  // 1 = risk, 0 = control, kUnlabeled = unknown
  std::vector<Message> messages;

  bool has_label() const { return label == 0 || label == 1; }
  std::size_t empty_message_count() const;
};

/// The 10-way sequential-release view of one user's messages.
struct ChunkStream {
  std::string user_id;
  std::vector<std::vector<Message>> chunks;
  std::vector<std::size_t> cumulative_counts;  // messages readable through chunk i
  std::size_t total_messages = 0;
};

/// Splits messages so that chunk i covers [floor((i-1)*n/k), floor(i*n/k)).
ChunkStream chunk_user(const UserRecord& user, int n_chunks = 10);

/// Reads JSON-lines corpora: one user object per line
/// {"user_id": str, "label": 0|1, "messages": [{"title","text","date"}...]}.
/// Messages are re-sorted by timestamp if needed. With require_labels the
/// label field is mandatory; without it, unlabeled users are accepted.
std::vector<UserRecord> load_corpus(const std::string& path, bool require_labels = true);

void save_corpus(std::span<const UserRecord> users, const std::string& path);

/// Knobs for the synthetic corpus generator.
struct GeneratorProfile {
  int min_messages = 10;
  int max_messages = 200;
  /// Message counts are snapped down to multiples of this (1 = no snapping).
  int message_step = 1;
  /// Probability that a positive user's message carries an explicit signal
  /// phrase (diagnosis statement, "my depression", an antidepressant, ...).
  double signal_rate = 0.6;
  double empty_message_rate = 0.01;
  /// When set, control users' last timestamps are systematically later than
  /// the risk users' ones, planting a recoverable label leak.
  bool timestamp_leak = false;
};

/// Deterministic for a fixed seed: positive users draw from first-person,
/// signal-phrase templates; negative users from neutral/news-like ones.
std::vector<UserRecord> generate_synthetic_corpus(int n_positive, int n_negative,
                                                  std::uint64_t seed,
                                                  const GeneratorProfile& profile = {});

struct LeakAuditReport {
  double f1 = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  /// Decision rule learnt from the single last-timestamp feature.
  std::int64_t boundary_timestamp = 0;
  bool positive_below_boundary = false;
  double warn_threshold = 0.6;
  bool warning = false;

  std::string rule_description() const;
};

/// Fits a logistic regression on the single feature "timestamp of the latest
/// post per user" and reports its test F1; a score above warn_threshold
/// indicates that the corpus leaks labels through collection time.
LeakAuditReport audit_timestamp_leak(std::span<const UserRecord> train,
                                     std::span<const UserRecord> test,
                                     double warn_threshold = 0.6);

}  // namespace earlyrisk
