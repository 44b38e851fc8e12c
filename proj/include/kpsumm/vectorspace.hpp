#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kpsumm/corpus.hpp"

namespace kpsumm {

// Term table over the passages of one summarization input. Terms are kept
// in first-appearance order; document_frequency counts passages containing
// a term, not occurrences.
struct Vocabulary {
  std::vector<std::string> terms;
  std::unordered_map<std::string, std::uint32_t> term_index;
  std::vector<int> document_frequency;  // indexed by term ordinal
  std::size_t n_passages = 0;

  std::size_t size() const { return terms.size(); }
  std::optional<std::uint32_t> find(const std::string& term) const;
};

// Sparse non-negative vector over term ordinals, entries sorted by term.
class WeightedVector {
 public:
  struct Entry {
    std::uint32_t term;
    double weight;
  };

  WeightedVector() = default;
  explicit WeightedVector(std::vector<Entry> entries);  // sorts, merges, drops zeros

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  double l1_norm() const;
  double l2_norm() const;
  double dot(const WeightedVector& other) const;
  WeightedVector scaled(double factor) const;

  static WeightedVector mean(std::span<const WeightedVector> vectors);

 private:
  std::vector<Entry> entries_;
};

enum class ColumnKind { real, keyphrase, query };

// Term x (passages + artificial passages) matrix: real passage columns
// first, then key phrases, then the optional query. No column is all-zero.
struct PassageMatrix {
  Vocabulary vocab;
  std::vector<WeightedVector> columns;
  std::vector<ColumnKind> kinds;
  std::size_t n_real = 0;

  std::size_t n_cols() const { return columns.size(); }
  std::size_t n_artificial() const { return columns.size() - n_real; }
  const WeightedVector& col(std::size_t i) const { return columns[i]; }
};

Vocabulary build_vocabulary(std::span<const Passage> passages);

// weight(t) = tf(t) * (ln((1 + n_passages) / (1 + df(t))) + 1), raw tf.
// Tokens absent from the vocabulary are ignored.
WeightedVector tfidf_vector(std::span<const std::string> tokens,
                            const Vocabulary& vocab, std::size_t n_passages);

// One column per passage, then one per key phrase, then the query when
// present. All-zero artificial columns are dropped with a warning.
PassageMatrix build_matrix(std::span<const Passage> passages,
                           std::span<const std::string> keyphrases,
                           const std::optional<std::string>& query,
                           Vocabulary vocab);

}  // namespace kpsumm
