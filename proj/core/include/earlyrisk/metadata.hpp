#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "earlyrisk/corpus.hpp"
#include "earlyrisk/textproc.hpp"

namespace earlyrisk {

constexpr std::size_t kMetadataDims = 27;

/// Index layout of the user-level metadata vector.
namespace feature {
enum : std::size_t {
  i_text = 0,
  i_title,
  possessive_pronouns,
  personal_pronouns,
  past_tense_verbs,
  fog,
  fre,
  lwf,
  dcr,
  month,
  text_length,
  title_length,
  depression_flag,
  anxiety_flag,
  therapist_flag,
  diagnosis_flag,
  antidepressants_flag,
  first_category,  // ten category-lexicon features occupy [17, 27)
};
}  // namespace feature

using MetadataVector = std::array<double, kMetadataDims>;

/// Fixed 27-column header used for CSV export and model fingerprints.
const std::array<std::string, kMetadataDims>& metadata_feature_names();

/// True for the boolean flag dimensions (values in {-1, +1}).
const std::array<bool, kMetadataDims>& metadata_boolean_mask();

/// Hand-picked high-precision phrases. All entries lowercase; diagnosis
/// patterns must mention "i" and "diagnosed".
struct PhraseLexicon {
  std::string depression = "my depression";
  std::string anxiety = "my anxiety";
  std::string therapist = "my therapist";
  std::vector<std::string> diagnosis_patterns;
  std::vector<std::string> antidepressants;

  void validate() const;
};

const PhraseLexicon& default_phrase_lexicon();

/// Ten named word categories counted per document (entries ending in '*'
/// match as prefixes). Order of `selected` fixes the feature order.
struct CategoryLexicon {
  struct Category {
    std::unordered_set<std::string> words;
    std::vector<std::string> prefixes;  // wildcard entries, '*' stripped

    bool matches(const std::string& token) const;
  };

  std::vector<std::string> selected;  // exactly ten category names
  std::vector<Category> categories;   // same order as `selected`

  void validate() const;
};

const CategoryLexicon& default_category_lexicon();

/// Word set for the Dale-Chall "familiar word" test.
using EasyWordSet = std::unordered_set<std::string>;
const EasyWordSet& default_easy_words();

const std::unordered_set<std::string>& possessive_pronoun_set();
const std::unordered_set<std::string>& personal_pronoun_set();
const std::unordered_set<std::string>& irregular_past_set();

/// Parses a lexicon bundle from JSON text:
/// {"phrases": {...}, "categories": {"order": [...], "sets": {...}}}
struct LexiconBundle {
  PhraseLexicon phrases;
  CategoryLexicon categories;
};
LexiconBundle load_lexicon_bundle(const std::string& path);

struct ExtractorConfig {
  /// Timestamps are otherwise discarded; the month-of-writing feature can be
  /// neutralized (forced to 0) without changing the vector layout.
  bool month_feature = true;
};

struct Readability {
  double fog = 0.0;
  double fre = 0.0;
  double lwf = 0.0;
  double dcr = 0.0;
};

/// FOG, FRE, LWF (first 100 words), and new Dale-Chall on one document.
/// Documents without words score zero on all four.
Readability readability(const TokenizedDocument& doc, const EasyWordSet& easy_words);

MetadataVector extract_metadata(const UserRecord& user, const PhraseLexicon& phrases,
                                const CategoryLexicon& categories,
                                const ExtractorConfig& cfg = {});

MetadataVector extract_metadata(const UserRecord& user, const PhraseLexicon& phrases,
                                const CategoryLexicon& categories,
                                const ExtractorConfig& cfg, std::size_t prefix_len);

/// Per-dimension (x - mean) / std fitted on training vectors; boolean flag
/// dimensions pass through unchanged.
class Standardizer {
 public:
  static Standardizer fit(std::span<const MetadataVector> train_vectors,
                          const std::array<bool, kMetadataDims>& bypass = metadata_boolean_mask());

  MetadataVector apply(const MetadataVector& v) const;

  const std::array<double, kMetadataDims>& mean() const { return mean_; }
  const std::array<double, kMetadataDims>& stddev() const { return stddev_; }
  const std::array<bool, kMetadataDims>& bypass() const { return bypass_; }

  std::string serialize() const;
  static Standardizer deserialize(const std::string& json_text);

 private:
  std::array<double, kMetadataDims> mean_{};
  std::array<double, kMetadataDims> stddev_{};
  std::array<bool, kMetadataDims> bypass_{};
};

/// CSV with user_id, label, then the fixed 27 feature columns.
void write_feature_csv(std::span<const UserRecord> users,
                       std::span<const MetadataVector> vectors, const std::string& path);

}  // namespace earlyrisk
