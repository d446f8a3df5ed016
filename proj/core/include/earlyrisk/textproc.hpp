#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace earlyrisk {

/// A tokenized document plus the counts needed by the readability formulas.
///
/// tokens keeps punctuation runs and recognized emoticons as tokens of their
/// own; everything except emoticons is lowercased (ASCII case folding).
struct TokenizedDocument {
  std::vector<std::string> tokens;
  /// Word tokens per sentence, for sentences that contain at least one word.
  std::vector<int> words_per_sentence;
  int sentence_count = 0;
  int word_count = 0;  // alphabetic tokens only
  int syllable_count = 0;
};

struct TokenizerConfig {
  /// Emoticons are matched against whole whitespace-delimited chunks and are
  /// the only tokens that keep their original case.
  std::unordered_set<std::string> emoticons;
};

/// Bundled default emoticon set (:), :(, :D, ;-), :P, <3, D:, ...).
const TokenizerConfig& default_tokenizer_config();

TokenizedDocument tokenize(std::string_view text);
TokenizedDocument tokenize(std::string_view text, const TokenizerConfig& cfg);

/// True for tokens made of letters (apostrophes allowed between letters).
bool is_word_token(std::string_view token);

/// Vowel-group heuristic: maximal aeiouy groups, silent trailing "e" dropped
/// unless the word ends in consonant+"le"; at least 1 per word.
int count_syllables(std::string_view word);

/// Per-language stopword sets used by the stopword-count language filter.
class StopwordTable {
 public:
  using LangMap = std::map<std::string, std::unordered_set<std::string>>;

  StopwordTable() = default;
  explicit StopwordTable(LangMap languages);

  /// English plus ten other bundled languages.
  static const StopwordTable& bundled();

  /// Loads one plain-text list (one word per line, UTF-8) into `lang`.
  void load_language(const std::string& lang, const std::string& path);

  const LangMap& languages() const { return languages_; }

 private:
  LangMap languages_;
};

/// True iff the document has at least one English stopword and strictly more
/// of them than of any other single language in the table.
bool is_english(const TokenizedDocument& doc, const StopwordTable& table);

}  // namespace earlyrisk
