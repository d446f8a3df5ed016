#include "earlyrisk/metadata.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "earlyrisk/errors.hpp"

namespace earlyrisk {

namespace {

bool is_ascii_lower(const std::string& s) {
  return std::none_of(s.begin(), s.end(),
                      [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; });
}

// Proleptic Gregorian month from an epoch timestamp (UTC), no locale involved.
int month_utc(std::int64_t ts) {
  std::int64_t days = ts / 86400 + 719468;
  const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(days - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  return static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
}

bool is_past_tense(const std::string& token) {
  if (irregular_past_set().count(token) > 0) return true;
  return token.size() >= 4 && token.compare(token.size() - 2, 2, "ed") == 0;
}

// occurrences of `pattern` as a consecutive token run
int count_phrase(const std::vector<std::string>& tokens, const std::vector<std::string>& pattern) {
  if (pattern.empty() || tokens.size() < pattern.size()) return 0;
  int count = 0;
  for (std::size_t i = 0; i + pattern.size() <= tokens.size(); ++i) {
    if (std::equal(pattern.begin(), pattern.end(), tokens.begin() + i)) ++count;
  }
  return count;
}

std::vector<std::string> phrase_tokens(const std::string& phrase) {
  return tokenize(phrase).tokens;
}

}  // namespace

const std::array<std::string, kMetadataDims>& metadata_feature_names() {
  static const std::array<std::string, kMetadataDims> names = {
      "i_text",
      "i_title",
      "possessive_pronouns",
      "personal_pronouns",
      "past_tense_verbs",
      "fog",
      "fre",
      "lwf",
      "dcr",
      "month",
      "text_length",
      "title_length",
      "depression_flag",
      "anxiety_flag",
      "therapist_flag",
      "diagnosis_flag",
      "antidepressants_flag",
      "cat_function_words",
      "cat_i_variants",
      "cat_pronouns",
      "cat_personal_pronouns",
      "cat_verbs",
      "cat_cognitive_process",
      "cat_present_focus",
      "cat_dictionary_words",
      "cat_analytical_thinking",
      "cat_authenticity",
  };
  return names;
}

const std::array<bool, kMetadataDims>& metadata_boolean_mask() {
  static const std::array<bool, kMetadataDims> mask = [] {
    std::array<bool, kMetadataDims> m{};
    for (std::size_t i = feature::depression_flag; i <= feature::antidepressants_flag; ++i)
      m[i] = true;
    return m;
  }();
  return mask;
}

void PhraseLexicon::validate() const {
  auto check_lower = [](const std::string& s, const char* what) {
    if (s.empty() || !is_ascii_lower(s))
      throw ValidationError(std::string("phrase lexicon: ") + what + " must be non-empty lowercase");
  };
  check_lower(depression, "depression phrase");
  check_lower(anxiety, "anxiety phrase");
  check_lower(therapist, "therapist phrase");
  if (diagnosis_patterns.empty()) throw ValidationError("phrase lexicon: no diagnosis patterns");
  for (const auto& p : diagnosis_patterns) {
    check_lower(p, "diagnosis pattern");
    auto toks = phrase_tokens(p);
    bool has_i = std::find(toks.begin(), toks.end(), "i") != toks.end() ||
                 std::any_of(toks.begin(), toks.end(),
                             [](const std::string& t) { return t.rfind("i'", 0) == 0; });
    bool has_diag = p.find("diagnosed") != std::string::npos;
    if (!has_i || !has_diag)
      throw ValidationError("phrase lexicon: diagnosis pattern must mention \"i\" and \"diagnosed\": " + p);
  }
  for (const auto& a : antidepressants) check_lower(a, "antidepressant name");
}

bool CategoryLexicon::Category::matches(const std::string& token) const {
  if (words.count(token) > 0) return true;
  for (const auto& prefix : prefixes)
    if (token.size() >= prefix.size() && token.compare(0, prefix.size(), prefix) == 0) return true;
  return false;
}

void CategoryLexicon::validate() const {
  if (selected.size() != 10 || categories.size() != 10)
    throw ValidationError("category lexicon: exactly ten categories required, got " +
                          std::to_string(selected.size()));
  for (const auto& name : selected)
    if (name.empty()) throw ValidationError("category lexicon: empty category name");
}

LexiconBundle load_lexicon_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon bundle: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("lexicon bundle " + path + ": " + e.what());
  }

  LexiconBundle bundle;
  bundle.phrases = default_phrase_lexicon();
  if (j.contains("phrases")) {
    const auto& p = j["phrases"];
    if (p.contains("depression")) bundle.phrases.depression = p["depression"].get<std::string>();
    if (p.contains("anxiety")) bundle.phrases.anxiety = p["anxiety"].get<std::string>();
    if (p.contains("therapist")) bundle.phrases.therapist = p["therapist"].get<std::string>();
    if (p.contains("diagnosis_patterns"))
      bundle.phrases.diagnosis_patterns = p["diagnosis_patterns"].get<std::vector<std::string>>();
    if (p.contains("antidepressants"))
      bundle.phrases.antidepressants = p["antidepressants"].get<std::vector<std::string>>();
  }
  bundle.phrases.validate();

  bundle.categories = default_category_lexicon();
  if (j.contains("categories")) {
    const auto& c = j["categories"];
    if (!c.contains("order") || !c.contains("sets"))
      throw ParseError("lexicon bundle: categories need \"order\" and \"sets\"");
    CategoryLexicon lex;
    lex.selected = c["order"].get<std::vector<std::string>>();
    for (const auto& name : lex.selected) {
      if (!c["sets"].contains(name))
        throw ParseError("lexicon bundle: category set missing for " + name);
      CategoryLexicon::Category cat;
      for (const auto& entry : c["sets"][name]) {
        std::string word = entry.get<std::string>();
        if (!word.empty() && word.back() == '*')
          cat.prefixes.push_back(word.substr(0, word.size() - 1));
        else
          cat.words.insert(word);
      }
      lex.categories.push_back(std::move(cat));
    }
    lex.validate();
    bundle.categories = std::move(lex);
  }
  return bundle;
}

Readability readability(const TokenizedDocument& doc, const EasyWordSet& easy_words) {
  const double W = doc.word_count;
  if (doc.word_count == 0) return {};
  const double S = std::max(doc.sentence_count, 1);

  int complex_words = 0;
  int difficult_words = 0;
  int window_easy = 0, window_hard = 0;
  const int window = std::min(doc.word_count, 100);
  int seen_words = 0;
  for (const auto& tok : doc.tokens) {
    if (!is_word_token(tok)) continue;
    const int syl = count_syllables(tok);
    if (syl >= 3) ++complex_words;
    if (easy_words.count(tok) == 0) ++difficult_words;
    if (seen_words < window) {
      if (syl >= 3)
        ++window_hard;
      else
        ++window_easy;
    }
    ++seen_words;
  }

  // sentences spanned by the sampled window
  int window_sentences = 0;
  int remaining = window;
  for (int count : doc.words_per_sentence) {
    ++window_sentences;
    remaining -= count;
    if (remaining <= 0) break;
  }
  window_sentences = std::max(window_sentences, 1);

  Readability r;
  r.fog = 0.4 * (W / S + 100.0 * complex_words / W);
  r.fre = 206.835 - 1.015 * (W / S) - 84.6 * (doc.syllable_count / W);
  double lwf_raw = (window_easy + 3.0 * window_hard) / window_sentences;
  r.lwf = lwf_raw > 20.0 ? lwf_raw / 2.0 : (lwf_raw - 2.0) / 2.0;
  r.dcr = 0.1579 * (100.0 * difficult_words / W) + 0.0496 * (W / S);
  if (difficult_words / W > 0.05) r.dcr += 3.6365;
  return r;
}

MetadataVector extract_metadata(const UserRecord& user, const PhraseLexicon& phrases,
                                const CategoryLexicon& categories, const ExtractorConfig& cfg) {
  return extract_metadata(user, phrases, categories, cfg, user.messages.size());
}

MetadataVector extract_metadata(const UserRecord& user, const PhraseLexicon& phrases,
                                const CategoryLexicon& categories, const ExtractorConfig& cfg,
                                std::size_t prefix_len) {
  if (user.messages.empty()) throw ValidationError("extract_metadata: user has no messages");
  categories.validate();

  const auto depression_pat = phrase_tokens(phrases.depression);
  const auto anxiety_pat = phrase_tokens(phrases.anxiety);
  const auto therapist_pat = phrase_tokens(phrases.therapist);
  std::vector<std::vector<std::string>> diagnosis_pats;
  diagnosis_pats.reserve(phrases.diagnosis_patterns.size());
  for (const auto& p : phrases.diagnosis_patterns) diagnosis_pats.push_back(phrase_tokens(p));
  std::unordered_set<std::string> antidepressants(phrases.antidepressants.begin(),
                                                  phrases.antidepressants.end());

  MetadataVector v{};
  long phrase_sums[5] = {0, 0, 0, 0, 0};
  std::size_t n_docs = 0;

  const std::size_t limit = std::min(prefix_len, user.messages.size());
  for (std::size_t m = 0; m < limit; ++m) {
    const Message& msg = user.messages[m];
    if (msg.is_empty()) continue;
    ++n_docs;

    const TokenizedDocument text_doc = tokenize(msg.text);
    const TokenizedDocument title_doc = tokenize(msg.title);
    const TokenizedDocument all = tokenize(msg.text + "\n" + msg.title);

    for (const auto& t : text_doc.tokens)
      if (t == "i") v[feature::i_text] += 1.0;
    for (const auto& t : title_doc.tokens)
      if (t == "i") v[feature::i_title] += 1.0;

    for (const auto& t : all.tokens) {
      if (possessive_pronoun_set().count(t) > 0) v[feature::possessive_pronouns] += 1.0;
      if (personal_pronoun_set().count(t) > 0) v[feature::personal_pronouns] += 1.0;
      if (is_word_token(t) && is_past_tense(t)) v[feature::past_tense_verbs] += 1.0;
      if (antidepressants.count(t) > 0) ++phrase_sums[4];
      for (std::size_t c = 0; c < categories.categories.size(); ++c)
        if (categories.categories[c].matches(t)) v[feature::first_category + c] += 1.0;
    }

    const Readability r = readability(all, default_easy_words());
    v[feature::fog] += r.fog;
    v[feature::fre] += r.fre;
    v[feature::lwf] += r.lwf;
    v[feature::dcr] += r.dcr;

    if (cfg.month_feature) v[feature::month] += month_utc(msg.timestamp);
    v[feature::text_length] += static_cast<double>(text_doc.tokens.size());
    v[feature::title_length] += static_cast<double>(title_doc.tokens.size());

    phrase_sums[0] += count_phrase(all.tokens, depression_pat);
    phrase_sums[1] += count_phrase(all.tokens, anxiety_pat);
    phrase_sums[2] += count_phrase(all.tokens, therapist_pat);
    for (const auto& pat : diagnosis_pats) phrase_sums[3] += count_phrase(all.tokens, pat);
  }

  if (n_docs > 0) {
    const double inv = 1.0 / static_cast<double>(n_docs);
    for (std::size_t d = 0; d < kMetadataDims; ++d)
      if (!metadata_boolean_mask()[d]) v[d] *= inv;
  }
  for (int f = 0; f < 5; ++f)
    v[feature::depression_flag + f] = phrase_sums[f] > 0 ? 1.0 : -1.0;
  return v;
}

Standardizer Standardizer::fit(std::span<const MetadataVector> train_vectors,
                               const std::array<bool, kMetadataDims>& bypass) {
  if (train_vectors.size() < 2)
    throw ValidationError("Standardizer::fit: need at least 2 training vectors");

  Standardizer s;
  s.bypass_ = bypass;
  const double n = static_cast<double>(train_vectors.size());
  for (std::size_t d = 0; d < kMetadataDims; ++d) {
    double mean = 0.0;
    for (const auto& v : train_vectors) mean += v[d];
    mean /= n;
    double var = 0.0;
    for (const auto& v : train_vectors) var += (v[d] - mean) * (v[d] - mean);
    var /= n;  // population variance
    double stddev = std::sqrt(var);
    s.mean_[d] = mean;
    s.stddev_[d] = stddev > 0.0 ? stddev : 1.0;
  }
  return s;
}

MetadataVector Standardizer::apply(const MetadataVector& v) const {
  MetadataVector out;
  for (std::size_t d = 0; d < kMetadataDims; ++d)
    out[d] = bypass_[d] ? v[d] : (v[d] - mean_[d]) / stddev_[d];
  return out;
}

std::string Standardizer::serialize() const {
  nlohmann::json j;
  j["mean"] = mean_;
  j["stddev"] = stddev_;
  j["bypass"] = bypass_;
  return j.dump(2);
}

Standardizer Standardizer::deserialize(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("standardizer: invalid JSON: ") + e.what());
  }
  Standardizer s;
  auto mean = j.at("mean").get<std::vector<double>>();
  auto stddev = j.at("stddev").get<std::vector<double>>();
  auto bypass = j.at("bypass").get<std::vector<bool>>();
  if (mean.size() != kMetadataDims || stddev.size() != kMetadataDims || bypass.size() != kMetadataDims)
    throw ParseError("standardizer: wrong dimension count");
  std::copy(mean.begin(), mean.end(), s.mean_.begin());
  std::copy(stddev.begin(), stddev.end(), s.stddev_.begin());
  std::copy(bypass.begin(), bypass.end(), s.bypass_.begin());
  return s;
}

void write_feature_csv(std::span<const UserRecord> users,
                       std::span<const MetadataVector> vectors, const std::string& path) {
  if (users.size() != vectors.size())
    throw ValidationError("write_feature_csv: users/vectors size mismatch");
  std::ofstream out(path);
  if (!out) throw IoError("cannot write feature CSV: " + path);

  out << "user_id,label";
  for (const auto& name : metadata_feature_names()) out << ',' << name;
  out << '\n';

  char buf[64];
  for (std::size_t i = 0; i < users.size(); ++i) {
    out << users[i].user_id << ',' << users[i].label;
    for (double x : vectors[i]) {
      std::snprintf(buf, sizeof(buf), "%.10g", x);
      out << ',' << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace earlyrisk
