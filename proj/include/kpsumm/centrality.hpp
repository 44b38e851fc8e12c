#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kpsumm/corpus.hpp"
#include "kpsumm/metrics.hpp"
#include "kpsumm/vectorspace.hpp"

namespace kpsumm {

// Columns semantically closest to one owner column: every member m has
// similarity(col_m, col_owner) > epsilon, owner excluded.
struct SupportSet {
  std::uint32_t owner = 0;
  double epsilon = 0.0;
  std::vector<std::uint32_t> members;  // ascending
};

// Per-real-passage support-set membership counts and the resulting order
// (count desc, document order asc). Artificial columns never appear.
struct CentralityRanking {
  std::vector<int> scores;            // indexed by real-passage ordinal
  std::vector<std::uint32_t> order;
};

// Selected passages in original source order with budget accounting.
struct RankedSummary {
  std::vector<Passage> passages;
  std::vector<int> scores;  // centrality counts, aligned with passages
  int total_words = 0;
  int budget_words = 0;
};

// Similarity threshold for one owner: the mean similarity to the real
// passage columns (owner excluded), i.e. the mean-distance split between
// the closer and the further candidates. With fewer than two real
// distances the threshold degenerates to -infinity and the support set
// takes all other columns.
double compute_epsilon(std::size_t owner, const PassageMatrix& matrix, const Metric& metric);

// One support set per column, real and artificial alike; the candidate
// pool is all columns, membership is strict.
std::vector<SupportSet> compute_support_sets(const PassageMatrix& matrix, const Metric& metric);

// Counts, for every real passage, the support sets containing it; owners
// include the artificial columns, rankable passages do not.
CentralityRanking rank_passages(std::span<const SupportSet> support_sets,
                                const PassageMatrix& matrix);

// Greedy budget fill over an arbitrary passage ordering: take each passage
// that still fits, skip the ones that do not, never truncate; output is
// re-sorted into source order. scores may be empty.
RankedSummary select_by_order(std::span<const std::uint32_t> order,
                              std::span<const int> scores,
                              std::span<const Passage> passages, int budget_words);

RankedSummary extract_summary(const CentralityRanking& ranking,
                              std::span<const Passage> passages, int budget_words);

}  // namespace kpsumm
