#include "earlyrisk/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "earlyrisk/classifiers.hpp"
#include "earlyrisk/errors.hpp"

namespace earlyrisk {

using nlohmann::json;

std::size_t UserRecord::empty_message_count() const {
  return static_cast<std::size_t>(
      std::count_if(messages.begin(), messages.end(), [](const Message& m) { return m.is_empty(); }));
}

ChunkStream chunk_user(const UserRecord& user, int n_chunks) {
  if (n_chunks < 1) throw ValidationError("chunk_user: n_chunks must be >= 1");
  if (user.messages.empty()) throw ValidationError("chunk_user: user has no messages: " + user.user_id);

  const std::size_t n = user.messages.size();
  ChunkStream stream;
  stream.user_id = user.user_id;
  stream.total_messages = n;
  stream.chunks.reserve(n_chunks);
  stream.cumulative_counts.reserve(n_chunks);

  std::size_t prev = 0;
  for (int i = 1; i <= n_chunks; ++i) {
    std::size_t end = n * static_cast<std::size_t>(i) / static_cast<std::size_t>(n_chunks);
    stream.chunks.emplace_back(user.messages.begin() + prev, user.messages.begin() + end);
    stream.cumulative_counts.push_back(end);
    prev = end;
  }
  return stream;
}

namespace {

Message parse_message(const json& m, std::size_t line_no) {
  auto fail = [line_no](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  if (!m.is_object()) throw fail("message is not an object");
  Message msg;
  if (m.contains("title")) {
    if (!m["title"].is_string()) throw fail("message title is not a string");
    msg.title = m["title"].get<std::string>();
  }
  if (m.contains("text")) {
    if (!m["text"].is_string()) throw fail("message text is not a string");
    msg.text = m["text"].get<std::string>();
  }
  if (!m.contains("date") || !m["date"].is_number_integer())
    throw fail("message is missing integer date");
  msg.timestamp = m["date"].get<std::int64_t>();
  if (msg.timestamp < 0) throw fail("message date is negative");
  return msg;
}

}  // namespace

std::vector<UserRecord> load_corpus(const std::string& path, bool require_labels) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus: " + path);

  std::vector<UserRecord> users;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
    }
    auto fail = [line_no](const std::string& what) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + what);
    };
    if (!j.is_object()) throw fail("user entry is not an object");
    if (!j.contains("user_id") || !j["user_id"].is_string()) throw fail("missing user_id");

    UserRecord user;
    user.user_id = j["user_id"].get<std::string>();
    if (j.contains("label")) {
      if (!j["label"].is_number_integer()) throw fail("label is not an integer");
      int label = j["label"].get<int>();
      if (label != 0 && label != 1) throw fail("label must be 0 or 1");
      user.label = label;
    } else if (require_labels) {
      throw fail("missing label");
    }
    if (!j.contains("messages") || !j["messages"].is_array()) throw fail("missing messages array");
    for (const auto& m : j["messages"]) user.messages.push_back(parse_message(m, line_no));
    if (user.messages.empty()) throw fail("user has no messages");

    std::stable_sort(user.messages.begin(), user.messages.end(),
                     [](const Message& a, const Message& b) { return a.timestamp < b.timestamp; });

    if (!seen_ids.insert(user.user_id).second)
      throw ValidationError("duplicate user_id: " + user.user_id);
    users.push_back(std::move(user));
  }
  return users;
}

void save_corpus(std::span<const UserRecord> users, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write corpus: " + path);
  for (const auto& user : users) {
    json j;
    j["user_id"] = user.user_id;
    if (user.has_label()) j["label"] = user.label;
    json msgs = json::array();
    for (const auto& m : user.messages)
      msgs.push_back({{"title", m.title}, {"text", m.text}, {"date", m.timestamp}});
    j["messages"] = std::move(msgs);
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

namespace {

const std::vector<std::string> kSignalTemplates = {
    "i was diagnosed with depression last year and it still affects me",
    "my depression has been really bad this week",
    "my anxiety keeps me from going outside",
    "my therapist says i should write down how i feel",
    "i started taking zoloft last month and i feel a bit different",
    "my doctor put me on paxil and i am not sure it helps",
    "i've been diagnosed with anxiety and depression",
    "i was diagnosed with major depressive disorder two years ago",
    "my depression makes it hard to even answer messages",
    "i talked to my therapist about the thoughts i keep having",
    "i think my depression got worse after i lost my job",
    "i cried again today and i do not really know why",
};

const std::vector<std::string> kFirstPersonFiller = {
    "i stayed in bed most of the day and i watched the rain",
    "i tried to call my friend but i hung up before she answered",
    "i wanted to cook something but i had no energy left",
    "i keep thinking about what i said last week",
    "i walked home alone and i felt the cold more than usual",
    "i wish i could explain how i feel to my family",
    "i spent the evening reading old messages i sent",
    "i know i should sleep but i keep scrolling instead",
};

const std::vector<std::string> kNeutralTemplates = {
    "the match went to overtime and the crowd loved it",
    "new trailer for the series dropped today",
    "this recipe needs more garlic and a longer bake",
    "the library downtown extended its opening hours",
    "great photo, the lighting is perfect",
    "the patch notes mention a fix for the login bug",
    "city council approved the new bike lanes yesterday",
    "the keyboard has a nice tactile feel after the mod",
    "prices at the market were lower this weekend",
    "the documentary about coral reefs was stunning",
    "traffic on the bridge was terrible this morning",
    "the band announced three more tour dates",
    "check /r/AskHistorians for a great thread on this",
    "thanks for sharing, saved for later :)",
};

const std::vector<std::string> kMildFirstPerson = {
    "i think the second season was better overall",
    "nice build, i might try the same layout",
};

const std::vector<std::string> kTitles = {
    "question about this", "what do you think", "daily discussion thread",
    "just sharing",        "need some advice",  "did anyone else notice this",
};

constexpr std::int64_t kDay = 86400;
constexpr std::int64_t kBaseEpoch = 1356998400;  // 2013-01-01 UTC

UserRecord generate_user(std::mt19937_64& rng, const std::string& user_id, int label,
                         const GeneratorProfile& profile) {
  std::uniform_int_distribution<int> count_dist(profile.min_messages, profile.max_messages);
  int count = count_dist(rng);
  if (profile.message_step > 1) {
    count -= count % profile.message_step;
    if (count < profile.message_step) count = profile.message_step;
  }

  std::int64_t start_offset;
  if (profile.timestamp_leak) {
    // control users were collected later: their activity window sits after
    // the risk users' window
    std::uniform_int_distribution<std::int64_t> pos_start(0, 200 * kDay);
    std::uniform_int_distribution<std::int64_t> neg_start(500 * kDay, 800 * kDay);
    start_offset = label == 1 ? pos_start(rng) : neg_start(rng);
  } else {
    std::uniform_int_distribution<std::int64_t> any_start(0, 800 * kDay);
    start_offset = any_start(rng);
  }

  std::uniform_int_distribution<std::int64_t> gap(60, 7200);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> title_pick(0, kTitles.size() - 1);

  UserRecord user;
  user.user_id = user_id;
  user.label = label;
  user.messages.reserve(count);

  std::int64_t ts = kBaseEpoch + start_offset;
  for (int i = 0; i < count; ++i) {
    ts += gap(rng);
    Message msg;
    msg.timestamp = ts;
    if (unit(rng) < profile.empty_message_rate) {
      user.messages.push_back(std::move(msg));
      continue;
    }
    if (label == 1) {
      if (unit(rng) < profile.signal_rate) {
        std::uniform_int_distribution<std::size_t> pick(0, kSignalTemplates.size() - 1);
        msg.text = kSignalTemplates[pick(rng)];
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, kFirstPersonFiller.size() - 1);
        msg.text = kFirstPersonFiller[pick(rng)];
      }
    } else {
      if (unit(rng) < 0.1) {
        std::uniform_int_distribution<std::size_t> pick(0, kMildFirstPerson.size() - 1);
        msg.text = kMildFirstPerson[pick(rng)];
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, kNeutralTemplates.size() - 1);
        msg.text = kNeutralTemplates[pick(rng)];
      }
    }
    double title_roll = unit(rng);
    if (title_roll < 0.15) {
      // link-style post: title only
      msg.title = std::move(msg.text);
      msg.text.clear();
    } else if (title_roll < 0.45) {
      msg.title = kTitles[title_pick(rng)];
    }
    user.messages.push_back(std::move(msg));
  }
  return user;
}

}  // namespace

std::vector<UserRecord> generate_synthetic_corpus(int n_positive, int n_negative,
                                                  std::uint64_t seed,
                                                  const GeneratorProfile& profile) {
  if (n_positive < 0 || n_negative < 0)
    throw ValidationError("generate_synthetic_corpus: counts must be >= 0");
  if (profile.min_messages < 1 || profile.max_messages < profile.min_messages)
    throw ValidationError("generate_synthetic_corpus: bad message count range");
  if (profile.message_step < 1)
    throw ValidationError("generate_synthetic_corpus: message_step must be >= 1");

  std::mt19937_64 rng(seed);
  std::vector<UserRecord> users;
  users.reserve(static_cast<std::size_t>(n_positive) + n_negative);
  for (int i = 0; i < n_positive; ++i)
    users.push_back(generate_user(rng, "subject_p" + std::to_string(i + 1), 1, profile));
  for (int i = 0; i < n_negative; ++i)
    users.push_back(generate_user(rng, "subject_n" + std::to_string(i + 1), 0, profile));
  return users;
}

namespace {

std::int64_t last_timestamp(const UserRecord& user) {
  std::int64_t latest = 0;
  for (const auto& m : user.messages) latest = std::max(latest, m.timestamp);
  return latest;
}

void require_labeled(std::span<const UserRecord> users, const char* which) {
  if (users.empty()) throw ValidationError(std::string("audit_timestamp_leak: empty ") + which + " set");
  for (const auto& u : users)
    if (!u.has_label())
      throw ValidationError("audit_timestamp_leak: unlabeled user in " + std::string(which) + ": " + u.user_id);
}

}  // namespace

std::string LeakAuditReport::rule_description() const {
  std::ostringstream os;
  os << "predict risk when last post timestamp " << (positive_below_boundary ? "<= " : ">= ")
     << boundary_timestamp << " (epoch seconds)";
  return os.str();
}

LeakAuditReport audit_timestamp_leak(std::span<const UserRecord> train,
                                     std::span<const UserRecord> test,
                                     double warn_threshold) {
  require_labeled(train, "train");
  require_labeled(test, "test");

  std::vector<double> xs;
  std::vector<int> ys;
  xs.reserve(train.size());
  for (const auto& u : train) {
    xs.push_back(static_cast<double>(last_timestamp(u)));
    ys.push_back(u.label);
  }

  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  double stddev = std::sqrt(var / static_cast<double>(xs.size()));
  if (stddev <= 0.0) stddev = 1.0;

  std::vector<std::vector<double>> features;
  features.reserve(xs.size());
  for (double x : xs) features.push_back({(x - mean) / stddev});

  LogisticTrainConfig cfg;
  cfg.learning_rate = 0.5;
  cfg.epochs = 500;
  LogisticModel model = train_logistic(features, ys, cfg);

  std::size_t tp = 0, fp = 0, fn = 0;
  for (const auto& u : test) {
    const double z = (static_cast<double>(last_timestamp(u)) - mean) / stddev;
    const double zs[1] = {z};
    int predicted = predict_logistic(model, zs) > 0.5 ? 1 : 0;
    if (predicted == 1 && u.label == 1) ++tp;
    if (predicted == 1 && u.label == 0) ++fp;
    if (predicted == 0 && u.label == 1) ++fn;
  }

  LeakAuditReport report;
  report.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  report.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  report.f1 = report.precision + report.recall > 0
                  ? 2.0 * report.precision * report.recall / (report.precision + report.recall)
                  : 0.0;

  double w = model.weights[0];
  if (w != 0.0) {
    double z_star = -model.bias / w;
    report.boundary_timestamp = static_cast<std::int64_t>(mean + stddev * z_star);
    report.positive_below_boundary = w < 0.0;
  } else {
    report.boundary_timestamp = static_cast<std::int64_t>(mean);
    report.positive_below_boundary = false;
  }
  report.warn_threshold = warn_threshold;
  report.warning = report.f1 > warn_threshold;
  return report;
}

}  // namespace earlyrisk
