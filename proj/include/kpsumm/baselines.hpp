#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kpsumm/centrality.hpp"
#include "kpsumm/corpus.hpp"
#include "kpsumm/metrics.hpp"
#include "kpsumm/vectorspace.hpp"

namespace kpsumm {

struct MMRConfig {
  double lambda = 0.5;  // 1 = pure relevance, 0 = maximal diversity
  Metric sim1 = Metric::cosine();
  Metric sim2 = Metric::cosine();
};

// Greedy maximal-marginal-relevance ordering over the real passage
// columns: each step picks the passage maximizing
// lambda*Sim1(s, query) - (1-lambda)*max over selected j of Sim2(s, j),
// with the max over an empty selection taken as 0 and ties broken by
// document order. Throws DomainError on a zero query vector.
std::vector<std::uint32_t> mmr_rank(const PassageMatrix& matrix,
                                    const WeightedVector& query_vector,
                                    const MMRConfig& cfg);

// Orders passages by cosine similarity to the arithmetic-mean column
// (the centroid pseudo-passage), ties by document order. A minimal
// centroid baseline, not a MEAD reimplementation.
std::vector<std::uint32_t> centroid_rank(const PassageMatrix& matrix);

// Cluster-level wrappers: all documents concatenated chronologically,
// ranked, then budget-filled with the shared extractor.
RankedSummary mmr_summarize(const Cluster& cluster, const MMRConfig& cfg, int budget_words);
RankedSummary centroid_summarize(const Cluster& cluster, int budget_words);

}  // namespace kpsumm
