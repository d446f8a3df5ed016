#include "earlyrisk/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "earlyrisk/errors.hpp"

namespace earlyrisk {

namespace {

inline bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Bytes >= 0x80 (UTF-8 continuation/lead bytes) are treated as word material
// so that non-ASCII words survive as single tokens.
inline bool is_word_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) != 0;
}

inline bool is_ref_name_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) != 0 || c == '_' || c == '-';
}

inline char ascii_lower(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 0x80 ? static_cast<char>(std::tolower(u)) : c;
}

std::string lowercased(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(ascii_lower(c));
  return out;
}

// "/u/name" or "/r/name" starting at p, with p at a token boundary.
bool ref_starts_at(std::string_view chunk, size_t p) {
  if (p + 3 >= chunk.size()) return false;
  if (chunk[p] != '/' || chunk[p + 2] != '/') return false;
  if (chunk[p + 1] != 'u' && chunk[p + 1] != 'r') return false;
  if (!is_ref_name_char(chunk[p + 3])) return false;
  return p == 0 || !is_word_char(chunk[p - 1]);
}

bool contains_terminator(std::string_view tok) {
  return tok.find_first_of(".!?") != std::string_view::npos;
}

struct SentenceTracker {
  std::vector<int>* words_per_sentence;
  int current_words = 0;

  void word() { ++current_words; }
  void boundary() {
    if (current_words > 0) {
      words_per_sentence->push_back(current_words);
      current_words = 0;
    }
  }
};

}  // namespace

bool is_word_token(std::string_view token) {
  bool has_letter = false;
  for (size_t i = 0; i < token.size(); ++i) {
    unsigned char u = static_cast<unsigned char>(token[i]);
    if (u >= 0x80 || std::isalpha(u)) {
      has_letter = true;
    } else if (token[i] == '\'') {
      continue;
    } else {
      return false;
    }
  }
  return has_letter;
}

int count_syllables(std::string_view word) {
  auto is_vowel = [](char c) {
    c = ascii_lower(c);
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  std::string w;
  for (char c : word)
    if (c != '\'') w.push_back(ascii_lower(c));
  if (w.empty()) return 0;

  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  // silent trailing e, except consonant + "le" as in "table"
  if (w.size() >= 2 && w.back() == 'e') {
    bool cle = w.size() >= 3 && w[w.size() - 2] == 'l' && !is_vowel(w[w.size() - 3]);
    if (!cle) --groups;
  }
  return std::max(groups, 1);
}

const TokenizerConfig& default_tokenizer_config() {
  static const TokenizerConfig cfg{{
      ":)",  ":(",  ":D",  ":P",  ":p",  ";)",  ";-)", ":-)", ":-(", ":-D",
      ":-P", "<3",  "</3", "D:",  ":/",  ":-/", ":|",  ":O",  ":o",  ":3",
      "xD",  "XD",  ":'(", "^^",  ":*",  "=)",  "=(",
  }};
  return cfg;
}

TokenizedDocument tokenize(std::string_view text) {
  return tokenize(text, default_tokenizer_config());
}

TokenizedDocument tokenize(std::string_view text, const TokenizerConfig& cfg) {
  TokenizedDocument doc;
  SentenceTracker sentences{&doc.words_per_sentence};

  auto emit = [&](std::string tok, bool word_like) {
    if (word_like && is_word_token(tok)) {
      ++doc.word_count;
      doc.syllable_count += count_syllables(tok);
      sentences.word();
    }
    doc.tokens.push_back(std::move(tok));
  };

  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (is_space(text[i])) {
      bool newline = false;
      while (i < n && is_space(text[i])) {
        if (text[i] == '\n') newline = true;
        ++i;
      }
      if (newline) sentences.boundary();
      continue;
    }

    size_t chunk_end = i;
    while (chunk_end < n && !is_space(text[chunk_end])) ++chunk_end;
    std::string_view chunk = text.substr(i, chunk_end - i);
    i = chunk_end;

    // emoticons are recognized as whole chunks and keep their case
    if (cfg.emoticons.count(std::string(chunk)) > 0) {
      emit(std::string(chunk), false);
      continue;
    }

    size_t p = 0;
    while (p < chunk.size()) {
      if (ref_starts_at(chunk, p)) {
        char kind = chunk[p + 1];
        size_t q = p + 3;
        while (q < chunk.size() && is_ref_name_char(chunk[q])) ++q;
        if (kind == 'u') {
          emit("ref_user", false);
        } else {
          emit("ref_subreddit_" + lowercased(chunk.substr(p + 3, q - p - 3)), false);
        }
        p = q;
      } else if (is_word_char(chunk[p])) {
        size_t q = p;
        while (q < chunk.size()) {
          if (is_word_char(chunk[q])) {
            ++q;
          } else if (q + 1 < chunk.size() && is_word_char(chunk[q + 1])) {
            ++q;  // interior special character, e.g. f*ck or don't
          } else {
            break;
          }
        }
        emit(lowercased(chunk.substr(p, q - p)), true);
        p = q;
      } else {
        size_t q = p;
        while (q < chunk.size() && !is_word_char(chunk[q]) && !ref_starts_at(chunk, q)) ++q;
        if (q == p) ++q;
        std::string tok = lowercased(chunk.substr(p, q - p));
        bool end_sentence = contains_terminator(tok);
        emit(std::move(tok), false);
        if (end_sentence) sentences.boundary();
        p = q;
      }
    }
  }
  sentences.boundary();

  doc.sentence_count = static_cast<int>(doc.words_per_sentence.size());
  return doc;
}

StopwordTable::StopwordTable(LangMap languages) : languages_(std::move(languages)) {
  if (languages_.count("english") == 0 || languages_.at("english").empty())
    throw ValidationError("stopword table must contain a non-empty english list");
}

void StopwordTable::load_language(const std::string& lang, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword list: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) words.insert(line);
  }
  languages_[lang] = std::move(words);
}

bool is_english(const TokenizedDocument& doc, const StopwordTable& table) {
  const auto& langs = table.languages();
  auto en = langs.find("english");
  if (en == langs.end()) throw ValidationError("stopword table has no english list");

  int en_count = 0;
  for (const auto& tok : doc.tokens)
    if (en->second.count(tok) > 0) ++en_count;
  if (en_count < 1) return false;

  for (const auto& [lang, words] : langs) {
    if (lang == "english") continue;
    int count = 0;
    for (const auto& tok : doc.tokens)
      if (words.count(tok) > 0) ++count;
    if (count >= en_count) return false;
  }
  return true;
}

}  // namespace earlyrisk
