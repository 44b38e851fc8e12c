#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kpsumm/centrality.hpp"
#include "kpsumm/corpus.hpp"
#include "kpsumm/keyphrase.hpp"
#include "kpsumm/metrics.hpp"
#include "kpsumm/stopwords.hpp"

namespace kpsumm {

enum class Strategy { single_layer, waterfall, concat_baseline };

struct StrategyConfig {
  Strategy strategy = Strategy::waterfall;
  Metric metric = Metric::cosine();
  int budget_words = 250;
  int keyphrase_k = 40;  // also the per-document extraction cap
  bool use_query = true;
  std::optional<std::uint64_t> seed;
};

// One extraction per original document, fused by document frequency.
// The fused set is re-filtered (never re-extracted) at each hierarchy
// level.
KeyphraseSet cluster_keyphrases(const Cluster& cluster, const Stopwords& stopwords, int k);

// The single-document pipeline: vocabulary and matrix over the given
// passages, key phrases filtered to this text, query column when
// configured, support-set centrality, budget-filled extraction.
RankedSummary summarize_passages(std::span<const Passage> passages,
                                 const KeyphraseSet& keyphrases,
                                 const std::optional<std::string>& query,
                                 const StrategyConfig& cfg);

RankedSummary summarize_document(const Document& doc, const KeyphraseSet& keyphrases,
                                 const std::optional<std::string>& query,
                                 const StrategyConfig& cfg);

// Intermediate summary per document, concatenated chronologically,
// summarized once more.
RankedSummary single_layer_summarize(const Cluster& cluster, const StrategyConfig& cfg,
                                     const Stopwords& stopwords);

// Left fold over chronological order: merge the running summary with the
// next document's intermediate summary and summarize, through the most
// recent document. Every step uses the output budget.
RankedSummary waterfall_summarize(const Cluster& cluster, const StrategyConfig& cfg,
                                  const Stopwords& stopwords);

// All documents concatenated into one pseudo-document, summarized once.
RankedSummary concat_baseline_summarize(const Cluster& cluster, const StrategyConfig& cfg,
                                        const Stopwords& stopwords);

// Dispatches on cfg.strategy.
RankedSummary run_strategy(const Cluster& cluster, const StrategyConfig& cfg,
                           const Stopwords& stopwords);

struct ShuffleTrial {
  std::vector<std::size_t> permutation;  // position -> original document index
  RankedSummary summary;
};

// Runs the configured strategy on uniformly random document orders drawn
// from a deterministic seeded generator (cfg.seed required).
std::vector<ShuffleTrial> shuffled_trials(const Cluster& cluster, const StrategyConfig& cfg,
                                          const Stopwords& stopwords, int trials);

// Portable seeded Fisher-Yates (no std distribution involved).
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

Strategy parse_strategy(const std::string& name);
std::string strategy_name(Strategy strategy);

}  // namespace kpsumm
