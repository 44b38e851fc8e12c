#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kpsumm/centrality.hpp"
#include "kpsumm/corpus.hpp"

namespace kpsumm {

// n-gram multiset keyed by the joined token window.
using NgramCounts = std::unordered_map<std::string, int>;

NgramCounts extract_ngrams(std::span<const std::string> tokens, int n);

// Clipped n-gram recall. per_reference holds (matched, total) per
// reference in input order; references with fewer than n tokens
// contribute (0, 0) and are excluded from the mean.
struct RougeScore {
  int n = 1;
  double recall = 0.0;
  std::vector<std::pair<std::int64_t, std::int64_t>> per_reference;
};

// Lowercased, unstemmed, recall-only ROUGE-N, averaged arithmetically
// over references. Throws DomainError when every reference is shorter
// than n tokens.
RougeScore rouge_n_score(const std::string& candidate,
                         const std::vector<std::string>& references, int n);

// Scores a summary against the cluster references for n = 1 and n = 2.
std::pair<RougeScore, RougeScore> evaluate_cluster(const RankedSummary& summary,
                                                   const Cluster& cluster);

}  // namespace kpsumm
