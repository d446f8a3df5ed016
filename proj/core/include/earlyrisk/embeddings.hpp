#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace earlyrisk {

/// Dense word-vector table loaded from the plain-text format
/// ("token v1 v2 ... vD" per line, optional "count dim" header line).
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  EmbeddingTable(int dim, std::vector<std::string> tokens, std::vector<float> matrix);

  int dim() const { return dim_; }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::span<const float> row(std::size_t index) const;
  std::optional<std::size_t> index_of(const std::string& token) const;
  /// Exact-match vector, or nullopt for out-of-vocabulary tokens.
  std::optional<std::span<const float>> lookup(const std::string& token) const;

 private:
  int dim_ = 0;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> vocab_;
  std::vector<float> matrix_;  // row-major size() x dim()
};

EmbeddingTable load_embeddings(const std::string& path,
                               std::optional<std::size_t> limit = std::nullopt);

struct Neighbor {
  std::string token;
  double cosine = 0.0;
};

/// Top-k cosine neighbors of a stored token, excluding the token itself and
/// zero-norm rows; ties break toward the lower vocabulary index.
std::vector<Neighbor> nearest_neighbors(const EmbeddingTable& table, const std::string& token,
                                        std::size_t k);

struct AnalogySection {
  std::string name;
  bool syntactic = false;  // section names starting with "gram" are syntactic
  std::vector<std::array<std::string, 4>> questions;
};

struct AnalogyDataset {
  std::vector<AnalogySection> sections;

  /// ": section-name" headers followed by four lowercase words per line.
  static AnalogyDataset load(const std::string& path);

  std::size_t question_count() const;
};

struct AnalogyResult {
  long semantic_attempted = 0;
  long semantic_correct = 0;
  long syntactic_attempted = 0;
  long syntactic_correct = 0;
  long skipped = 0;  // questions with an out-of-vocabulary word

  double semantic_accuracy() const;
  double syntactic_accuracy() const;
  double total_accuracy() const;
  /// Integer percentages, the form the analogy benchmark is reported in.
  int semantic_pct() const;
  int syntactic_pct() const;
  int total_pct() const;
};

/// vec(b) - vec(a) + vec(c), nearest by cosine over the vocabulary minus
/// {a, b, c}; a question counts as correct iff the argmax equals d.
AnalogyResult evaluate_analogies(const EmbeddingTable& table, const AnalogyDataset& dataset);

}  // namespace earlyrisk
