#include "kpsumm/vectorspace.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "kpsumm/common.hpp"
#include "kpsumm/text.hpp"

namespace kpsumm {

std::optional<std::uint32_t> Vocabulary::find(const std::string& term) const {
  auto it = term_index.find(term);
  if (it == term_index.end()) return std::nullopt;
  return it->second;
}

WeightedVector::WeightedVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.term < b.term; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (const Entry& e : entries_) {
    if (!merged.empty() && merged.back().term == e.term)
      merged.back().weight += e.weight;
    else
      merged.push_back(e);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Entry& e) { return e.weight <= 0.0; }),
               merged.end());
  entries_ = std::move(merged);
}

double WeightedVector::l1_norm() const {
  double sum = 0;
  for (const Entry& e : entries_) sum += e.weight;
  return sum;
}

double WeightedVector::l2_norm() const {
  double sum = 0;
  for (const Entry& e : entries_) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

double WeightedVector::dot(const WeightedVector& other) const {
  double sum = 0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->term == b->term) {
      sum += a->weight * b->weight;
      ++a;
      ++b;
    } else if (a->term < b->term) {
      ++a;
    } else {
      ++b;
    }
  }
  return sum;
}

WeightedVector WeightedVector::scaled(double factor) const {
  std::vector<Entry> entries = entries_;
  for (Entry& e : entries) e.weight *= factor;
  return WeightedVector(std::move(entries));
}

WeightedVector WeightedVector::mean(std::span<const WeightedVector> vectors) {
  std::vector<Entry> all;
  for (const WeightedVector& v : vectors)
    all.insert(all.end(), v.entries().begin(), v.entries().end());
  WeightedVector sum(std::move(all));
  return vectors.empty() ? sum : sum.scaled(1.0 / static_cast<double>(vectors.size()));
}

Vocabulary build_vocabulary(std::span<const Passage> passages) {
  Vocabulary vocab;
  vocab.n_passages = passages.size();
  for (const Passage& p : passages) {
    std::unordered_set<std::string> seen;
    for (const std::string& token : p.tokens) {
      auto [it, inserted] =
          vocab.term_index.try_emplace(token, static_cast<std::uint32_t>(vocab.terms.size()));
      if (inserted) {
        vocab.terms.push_back(token);
        vocab.document_frequency.push_back(0);
      }
      if (seen.insert(token).second) ++vocab.document_frequency[it->second];
    }
  }
  if (vocab.terms.empty()) throw InputError("cannot build vocabulary: all passages are empty");
  return vocab;
}

WeightedVector tfidf_vector(std::span<const std::string> tokens,
                            const Vocabulary& vocab, std::size_t n_passages) {
  std::unordered_map<std::uint32_t, int> counts;
  for (const std::string& token : tokens) {
    if (auto idx = vocab.find(token)) ++counts[*idx];
  }
  std::vector<WeightedVector::Entry> entries;
  entries.reserve(counts.size());
  for (const auto& [term, tf] : counts) {
    double idf = std::log((1.0 + static_cast<double>(n_passages)) /
                          (1.0 + vocab.document_frequency[term])) +
                 1.0;
    entries.push_back({term, static_cast<double>(tf) * idf});
  }
  return WeightedVector(std::move(entries));
}

PassageMatrix build_matrix(std::span<const Passage> passages,
                           std::span<const std::string> keyphrases,
                           const std::optional<std::string>& query,
                           Vocabulary vocab) {
  if (passages.empty()) throw InputError("cannot build matrix without passages");
  PassageMatrix matrix;
  const std::size_t n = passages.size();
  matrix.n_real = n;
  for (const Passage& p : passages) {
    WeightedVector column = tfidf_vector(p.tokens, vocab, n);
    if (column.empty())
      throw InputError("passage (" + p.doc_id + ", " + std::to_string(p.index) +
                       ") produced an all-zero column");
    matrix.columns.push_back(std::move(column));
    matrix.kinds.push_back(ColumnKind::real);
  }
  for (const std::string& phrase : keyphrases) {
    std::vector<std::string> tokens = tokenize(phrase);
    WeightedVector column = tfidf_vector(tokens, vocab, n);
    if (column.empty()) {
      warn("dropping all-zero key phrase column: '" + phrase + "'");
      continue;
    }
    matrix.columns.push_back(std::move(column));
    matrix.kinds.push_back(ColumnKind::keyphrase);
  }
  if (query) {
    std::vector<std::string> tokens = tokenize(*query);
    WeightedVector column = tfidf_vector(tokens, vocab, n);
    if (column.empty()) {
      warn("dropping all-zero query column: '" + *query + "'");
    } else {
      matrix.columns.push_back(std::move(column));
      matrix.kinds.push_back(ColumnKind::query);
    }
  }
  matrix.vocab = std::move(vocab);
  return matrix;
}

}  // namespace kpsumm
