#include "earlyrisk/embeddings.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include "earlyrisk/errors.hpp"

namespace earlyrisk {

EmbeddingTable::EmbeddingTable(int dim, std::vector<std::string> tokens, std::vector<float> matrix)
    : dim_(dim), tokens_(std::move(tokens)), matrix_(std::move(matrix)) {
  if (dim_ <= 0) throw ValidationError("embedding table: dimension must be positive");
  if (matrix_.size() != tokens_.size() * static_cast<std::size_t>(dim_))
    throw ValidationError("embedding table: matrix size does not match vocabulary");
  vocab_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) vocab_.emplace(tokens_[i], i);
  for (float x : matrix_)
    if (!std::isfinite(x)) throw ValidationError("embedding table: non-finite value");
}

std::span<const float> EmbeddingTable::row(std::size_t index) const {
  return {matrix_.data() + index * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
}

std::optional<std::size_t> EmbeddingTable::index_of(const std::string& token) const {
  auto it = vocab_.find(token);
  if (it == vocab_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::span<const float>> EmbeddingTable::lookup(const std::string& token) const {
  auto idx = index_of(token);
  if (!idx) return std::nullopt;
  return row(*idx);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool parse_float(std::string_view s, float& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool is_integer(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

EmbeddingTable load_embeddings(const std::string& path, std::optional<std::size_t> limit) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vector file: " + path);

  std::vector<std::string> tokens;
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<float> matrix;
  int dim = -1;

  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (first) {
      first = false;
      // optional "count dim" header
      if (fields.size() == 2 && is_integer(fields[0]) && is_integer(fields[1])) continue;
    }
    if (limit && tokens.size() >= *limit) break;

    if (fields.size() < 2)
      throw ParseError("vector file line " + std::to_string(line_no) + ": too few fields");
    const int row_dim = static_cast<int>(fields.size()) - 1;
    if (dim < 0)
      dim = row_dim;
    else if (row_dim != dim)
      throw ParseError("vector file line " + std::to_string(line_no) + ": expected " +
                       std::to_string(dim) + " values, got " + std::to_string(row_dim));

    std::string token(fields[0]);
    if (seen.count(token) > 0) continue;  // duplicates keep first occurrence

    std::vector<float> values(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) {
      if (!parse_float(fields[static_cast<std::size_t>(d) + 1], values[static_cast<std::size_t>(d)]))
        throw ParseError("vector file line " + std::to_string(line_no) + ": bad number '" +
                         std::string(fields[static_cast<std::size_t>(d) + 1]) + "'");
      if (!std::isfinite(values[static_cast<std::size_t>(d)]))
        throw ParseError("vector file line " + std::to_string(line_no) + ": non-finite value");
    }
    seen.emplace(token, tokens.size());
    tokens.push_back(std::move(token));
    matrix.insert(matrix.end(), values.begin(), values.end());
  }
  if (dim < 0) throw ParseError("vector file " + path + ": no vectors found");
  return EmbeddingTable(dim, std::move(tokens), std::move(matrix));
}

namespace {

double norm(std::span<const float> v) {
  double s = 0.0;
  for (float x : v) s += static_cast<double>(x) * x;
  return std::sqrt(s);
}

double cosine(std::span<const float> a, std::span<const float> b, double na, double nb) {
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += static_cast<double>(a[i]) * b[i];
  return dot / (na * nb);
}

}  // namespace

std::vector<Neighbor> nearest_neighbors(const EmbeddingTable& table, const std::string& token,
                                        std::size_t k) {
  if (k < 1) throw ValidationError("nearest_neighbors: k must be >= 1");
  auto query_idx = table.index_of(token);
  if (!query_idx) throw ValidationError("nearest_neighbors: unknown token '" + token + "'");

  const auto query = table.row(*query_idx);
  const double qn = norm(query);
  std::vector<std::pair<double, std::size_t>> scored;  // (cosine, index)
  if (qn > 0.0) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (i == *query_idx) continue;
      const double rn = norm(table.row(i));
      if (rn <= 0.0) continue;
      scored.emplace_back(cosine(query, table.row(i), qn, rn), i);
    }
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  if (scored.size() > k) scored.resize(k);

  std::vector<Neighbor> out;
  out.reserve(scored.size());
  for (const auto& [cos, idx] : scored) out.push_back({table.tokens()[idx], cos});
  return out;
}

AnalogyDataset AnalogyDataset::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open analogy dataset: " + path);

  AnalogyDataset ds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields[0].front() == ':') {
      std::string name;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        std::string_view f = fields[i];
        if (i == 0) f.remove_prefix(1);
        if (!f.empty()) {
          if (!name.empty()) name += ' ';
          name += std::string(f);
        }
      }
      AnalogySection section;
      section.name = name;
      section.syntactic = name.rfind("gram", 0) == 0;
      ds.sections.push_back(std::move(section));
      continue;
    }
    if (fields.size() != 4)
      throw ParseError("analogy dataset line " + std::to_string(line_no) +
                       ": expected 4 words, got " + std::to_string(fields.size()));
    if (ds.sections.empty()) {
      ds.sections.push_back({"default", false, {}});
    }
    std::array<std::string, 4> q;
    for (int i = 0; i < 4; ++i) {
      std::string w(fields[static_cast<std::size_t>(i)]);
      for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      q[static_cast<std::size_t>(i)] = std::move(w);
    }
    ds.sections.back().questions.push_back(std::move(q));
  }
  if (ds.question_count() == 0) throw ParseError("analogy dataset " + path + ": no questions");
  return ds;
}

std::size_t AnalogyDataset::question_count() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.questions.size();
  return n;
}

double AnalogyResult::semantic_accuracy() const {
  return semantic_attempted > 0 ? static_cast<double>(semantic_correct) / semantic_attempted : 0.0;
}
double AnalogyResult::syntactic_accuracy() const {
  return syntactic_attempted > 0 ? static_cast<double>(syntactic_correct) / syntactic_attempted
                                 : 0.0;
}
double AnalogyResult::total_accuracy() const {
  const long attempted = semantic_attempted + syntactic_attempted;
  return attempted > 0 ? static_cast<double>(semantic_correct + syntactic_correct) / attempted : 0.0;
}
int AnalogyResult::semantic_pct() const { return static_cast<int>(std::lround(100.0 * semantic_accuracy())); }
int AnalogyResult::syntactic_pct() const { return static_cast<int>(std::lround(100.0 * syntactic_accuracy())); }
int AnalogyResult::total_pct() const { return static_cast<int>(std::lround(100.0 * total_accuracy())); }

AnalogyResult evaluate_analogies(const EmbeddingTable& table, const AnalogyDataset& dataset) {
  if (dataset.question_count() == 0) throw ValidationError("evaluate_analogies: empty dataset");

  std::vector<double> norms(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) norms[i] = norm(table.row(i));

  AnalogyResult result;
  std::vector<double> target(static_cast<std::size_t>(table.dim()));
  for (const auto& section : dataset.sections) {
    for (const auto& q : section.questions) {
      auto ia = table.index_of(q[0]);
      auto ib = table.index_of(q[1]);
      auto ic = table.index_of(q[2]);
      auto id = table.index_of(q[3]);
      if (!ia || !ib || !ic || !id) {
        ++result.skipped;
        continue;
      }
      const auto va = table.row(*ia);
      const auto vb = table.row(*ib);
      const auto vc = table.row(*ic);
      for (int d = 0; d < table.dim(); ++d) {
        auto ud = static_cast<std::size_t>(d);
        target[ud] = static_cast<double>(vb[ud]) - va[ud] + vc[ud];
      }
      double tn = 0.0;
      for (double x : target) tn += x * x;
      tn = std::sqrt(tn);

      std::size_t best = table.size();
      double best_cos = -2.0;
      if (tn > 0.0) {
        for (std::size_t i = 0; i < table.size(); ++i) {
          if (i == *ia || i == *ib || i == *ic) continue;
          if (norms[i] <= 0.0) continue;
          const auto r = table.row(i);
          double dot = 0.0;
          for (std::size_t d = 0; d < target.size(); ++d) dot += target[d] * r[d];
          const double cos = dot / (tn * norms[i]);
          if (cos > best_cos) {
            best_cos = cos;
            best = i;
          }
        }
      }
      const bool correct = best == *id;
      if (section.syntactic) {
        ++result.syntactic_attempted;
        if (correct) ++result.syntactic_correct;
      } else {
        ++result.semantic_attempted;
        if (correct) ++result.semantic_correct;
      }
    }
  }
  return result;
}

}  // namespace earlyrisk
