#include "kpsumm/baselines.hpp"

#include <algorithm>
#include <limits>

#include "kpsumm/common.hpp"
#include "kpsumm/text.hpp"

namespace kpsumm {

std::vector<std::uint32_t> mmr_rank(const PassageMatrix& matrix,
                                    const WeightedVector& query_vector,
                                    const MMRConfig& cfg) {
  if (cfg.lambda < 0.0 || cfg.lambda > 1.0)
    throw DomainError("mmr lambda must lie in [0, 1]");
  if (query_vector.empty())
    throw DomainError(
        "MMR is query-driven and this input has no usable query; "
        "use the centrality strategies for query-less clusters");

  const std::size_t n = matrix.n_real;
  std::vector<double> relevance(n);
  for (std::size_t s = 0; s < n; ++s)
    relevance[s] = similarity(cfg.sim1, matrix.col(s), query_vector);

  std::vector<std::vector<double>> redundancy(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      redundancy[i][j] = redundancy[j][i] =
          similarity(cfg.sim2, matrix.col(i), matrix.col(j));

  std::vector<std::uint32_t> order;
  order.reserve(n);
  std::vector<bool> selected(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_idx = n;
    for (std::size_t s = 0; s < n; ++s) {
      if (selected[s]) continue;
      double max_redundancy = 0.0;  // empty selection contributes 0
      bool any = false;
      for (std::uint32_t j : order) {
        double r = redundancy[s][j];
        if (!any || r > max_redundancy) max_redundancy = r;
        any = true;
      }
      double score = cfg.lambda * relevance[s] - (1.0 - cfg.lambda) * max_redundancy;
      if (score > best) {  // strict: earliest passage wins ties
        best = score;
        best_idx = s;
      }
    }
    selected[best_idx] = true;
    order.push_back(static_cast<std::uint32_t>(best_idx));
  }
  return order;
}

std::vector<std::uint32_t> centroid_rank(const PassageMatrix& matrix) {
  if (matrix.n_real == 0) throw InputError("centroid ranking needs at least one passage");
  std::span<const WeightedVector> real_columns(matrix.columns.data(), matrix.n_real);
  WeightedVector centroid = WeightedVector::mean(real_columns);

  std::vector<double> sims(matrix.n_real);
  for (std::size_t s = 0; s < matrix.n_real; ++s)
    sims[s] = cosine_similarity(matrix.col(s), centroid);

  std::vector<std::uint32_t> order(matrix.n_real);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (sims[a] != sims[b]) return sims[a] > sims[b];
    return a < b;
  });
  return order;
}

namespace {

PassageMatrix cluster_matrix(const std::vector<Passage>& passages) {
  Vocabulary vocab = build_vocabulary(passages);
  return build_matrix(passages, {}, std::nullopt, std::move(vocab));
}

}  // namespace

RankedSummary mmr_summarize(const Cluster& cluster, const MMRConfig& cfg, int budget_words) {
  std::vector<Passage> passages = cluster.all_passages();
  PassageMatrix matrix = cluster_matrix(passages);
  WeightedVector query_vector;
  if (cluster.query) {
    std::vector<std::string> tokens = tokenize(*cluster.query);
    query_vector = tfidf_vector(tokens, matrix.vocab, matrix.n_real);
  }
  std::vector<std::uint32_t> order = mmr_rank(matrix, query_vector, cfg);
  return select_by_order(order, {}, passages, budget_words);
}

RankedSummary centroid_summarize(const Cluster& cluster, int budget_words) {
  std::vector<Passage> passages = cluster.all_passages();
  PassageMatrix matrix = cluster_matrix(passages);
  std::vector<std::uint32_t> order = centroid_rank(matrix);
  return select_by_order(order, {}, passages, budget_words);
}

}  // namespace kpsumm
