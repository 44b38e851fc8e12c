#include "kpsumm/multidoc.hpp"

#include <algorithm>

#include "kpsumm/common.hpp"

namespace kpsumm {

namespace {

// splitmix64; fully specified, unlike the std distributions.
std::uint64_t mix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t bounded(std::uint64_t& state, std::uint64_t n) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = mix64(state);
  } while (x >= limit);
  return x % n;
}

std::vector<Passage> concat_passages(const std::vector<Passage>& a,
                                     const std::vector<Passage>& b) {
  std::vector<Passage> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t state = seed;
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded(state, i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

KeyphraseSet cluster_keyphrases(const Cluster& cluster, const Stopwords& stopwords, int k) {
  if (k < 0) throw DomainError("keyphrase cap must be >= 0");
  if (k == 0) {
    KeyphraseSet none;  // key-phrase signals disabled
    none.k = 0;
    return none;
  }
  std::vector<std::vector<ScoredPhrase>> per_doc;
  per_doc.reserve(cluster.documents.size());
  for (const Document& doc : cluster.documents) {
    Vocabulary vocab = build_vocabulary(doc.passages);
    per_doc.push_back(extract_document_keyphrases(doc, vocab, stopwords, k));
  }
  return fuse_keyphrases(per_doc, k);
}

RankedSummary summarize_passages(std::span<const Passage> passages,
                                 const KeyphraseSet& keyphrases,
                                 const std::optional<std::string>& query,
                                 const StrategyConfig& cfg) {
  if (passages.empty()) {
    // A tight budget can empty out an intermediate stage; the final
    // summary is then legitimately empty rather than an error.
    RankedSummary empty;
    empty.budget_words = cfg.budget_words;
    return empty;
  }
  Vocabulary vocab = build_vocabulary(passages);
  std::vector<std::string> filtered = filter_keyphrases_for_text(keyphrases, passages);
  std::optional<std::string> query_column = cfg.use_query ? query : std::nullopt;
  PassageMatrix matrix = build_matrix(passages, filtered, query_column, std::move(vocab));
  std::vector<SupportSet> support_sets = compute_support_sets(matrix, cfg.metric);
  CentralityRanking ranking = rank_passages(support_sets, matrix);
  return extract_summary(ranking, passages, cfg.budget_words);
}

RankedSummary summarize_document(const Document& doc, const KeyphraseSet& keyphrases,
                                 const std::optional<std::string>& query,
                                 const StrategyConfig& cfg) {
  if (doc.passages.empty()) throw InputError("document '" + doc.id + "' has no passages");
  return summarize_passages(doc.passages, keyphrases, query, cfg);
}

RankedSummary single_layer_summarize(const Cluster& cluster, const StrategyConfig& cfg,
                                     const Stopwords& stopwords) {
  if (cluster.documents.empty()) throw InputError("cluster '" + cluster.id + "' is empty");
  KeyphraseSet keyphrases = cluster_keyphrases(cluster, stopwords, cfg.keyphrase_k);

  std::vector<Passage> aggregate;
  for (const Document& doc : cluster.documents) {
    RankedSummary intermediate = summarize_document(doc, keyphrases, cluster.query, cfg);
    aggregate.insert(aggregate.end(), intermediate.passages.begin(),
                     intermediate.passages.end());
  }
  return summarize_passages(aggregate, keyphrases, cluster.query, cfg);
}

RankedSummary waterfall_summarize(const Cluster& cluster, const StrategyConfig& cfg,
                                  const Stopwords& stopwords) {
  if (cluster.documents.empty()) throw InputError("cluster '" + cluster.id + "' is empty");
  KeyphraseSet keyphrases = cluster_keyphrases(cluster, stopwords, cfg.keyphrase_k);

  RankedSummary running =
      summarize_document(cluster.documents.front(), keyphrases, cluster.query, cfg);
  for (std::size_t d = 1; d < cluster.documents.size(); ++d) {
    RankedSummary intermediate =
        summarize_document(cluster.documents[d], keyphrases, cluster.query, cfg);
    std::vector<Passage> merged = concat_passages(running.passages, intermediate.passages);
    running = summarize_passages(merged, keyphrases, cluster.query, cfg);
  }
  return running;
}

RankedSummary concat_baseline_summarize(const Cluster& cluster, const StrategyConfig& cfg,
                                        const Stopwords& stopwords) {
  if (cluster.documents.empty()) throw InputError("cluster '" + cluster.id + "' is empty");
  KeyphraseSet keyphrases = cluster_keyphrases(cluster, stopwords, cfg.keyphrase_k);
  std::vector<Passage> all = cluster.all_passages();
  return summarize_passages(all, keyphrases, cluster.query, cfg);
}

RankedSummary run_strategy(const Cluster& cluster, const StrategyConfig& cfg,
                           const Stopwords& stopwords) {
  switch (cfg.strategy) {
    case Strategy::single_layer: return single_layer_summarize(cluster, cfg, stopwords);
    case Strategy::waterfall: return waterfall_summarize(cluster, cfg, stopwords);
    case Strategy::concat_baseline: return concat_baseline_summarize(cluster, cfg, stopwords);
  }
  throw DomainError("unreachable strategy");
}

std::vector<ShuffleTrial> shuffled_trials(const Cluster& cluster, const StrategyConfig& cfg,
                                          const Stopwords& stopwords, int trials) {
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (!cfg.seed) throw InputError("shuffled trials require a seed");

  std::uint64_t master = *cfg.seed;
  std::vector<std::uint64_t> trial_seeds;
  trial_seeds.reserve(trials);
  for (int t = 0; t < trials; ++t) trial_seeds.push_back(mix64(master));

  std::vector<ShuffleTrial> results;
  results.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    ShuffleTrial trial;
    trial.permutation = seeded_permutation(cluster.documents.size(), trial_seeds[t]);
    Cluster permuted;
    permuted.id = cluster.id;
    permuted.query = cluster.query;
    permuted.references = cluster.references;
    permuted.documents.reserve(cluster.documents.size());
    for (std::size_t pos : trial.permutation)
      permuted.documents.push_back(cluster.documents[pos]);
    trial.summary = run_strategy(permuted, cfg, stopwords);
    results.push_back(std::move(trial));
  }
  return results;
}

Strategy parse_strategy(const std::string& name) {
  if (name == "single-layer") return Strategy::single_layer;
  if (name == "waterfall") return Strategy::waterfall;
  if (name == "concat") return Strategy::concat_baseline;
  throw DomainError("unknown strategy '" + name +
                    "' (expected single-layer|waterfall|concat|mmr|centroid)");
}

std::string strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::single_layer: return "single-layer";
    case Strategy::waterfall: return "waterfall";
    case Strategy::concat_baseline: return "concat";
  }
  return "?";
}

}  // namespace kpsumm
