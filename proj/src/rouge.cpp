#include "kpsumm/rouge.hpp"

#include <algorithm>

#include "kpsumm/common.hpp"
#include "kpsumm/text.hpp"

namespace kpsumm {

NgramCounts extract_ngrams(std::span<const std::string> tokens, int n) {
  if (n < 1) throw DomainError("n-gram size must be >= 1");
  NgramCounts counts;
  if (tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j) {
      key.push_back('\x1e');
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

RougeScore rouge_n_score(const std::string& candidate,
                         const std::vector<std::string>& references, int n) {
  if (references.empty()) throw DomainError("rouge scoring needs at least one reference");

  std::vector<std::string> candidate_tokens = tokenize(candidate);
  NgramCounts candidate_grams = extract_ngrams(candidate_tokens, n);

  RougeScore score;
  score.n = n;
  double recall_sum = 0.0;
  std::size_t valid = 0;
  for (const std::string& reference : references) {
    std::vector<std::string> reference_tokens = tokenize(reference);
    if (reference_tokens.size() < static_cast<std::size_t>(n)) {
      score.per_reference.emplace_back(0, 0);
      continue;
    }
    NgramCounts reference_grams = extract_ngrams(reference_tokens, n);
    std::int64_t matched = 0;
    std::int64_t total = 0;
    for (const auto& [gram, count] : reference_grams) {
      total += count;
      auto it = candidate_grams.find(gram);
      if (it != candidate_grams.end()) matched += std::min(count, it->second);
    }
    score.per_reference.emplace_back(matched, total);
    recall_sum += static_cast<double>(matched) / static_cast<double>(total);
    ++valid;
  }
  if (valid == 0)
    throw DomainError("all references are shorter than " + std::to_string(n) + " tokens");
  score.recall = recall_sum / static_cast<double>(valid);
  return score;
}

std::pair<RougeScore, RougeScore> evaluate_cluster(const RankedSummary& summary,
                                                   const Cluster& cluster) {
  if (cluster.references.empty())
    throw DomainError("cluster '" + cluster.id +
                      "' has no reference summaries; add refs/*.txt to evaluate");
  std::string candidate;
  for (const Passage& p : summary.passages) {
    if (!candidate.empty()) candidate.push_back('\n');
    candidate += p.text;
  }
  return {rouge_n_score(candidate, cluster.references, 1),
          rouge_n_score(candidate, cluster.references, 2)};
}

}  // namespace kpsumm
