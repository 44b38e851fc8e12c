#include "kpsumm/centrality.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kpsumm/common.hpp"

namespace kpsumm {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double epsilon_from_similarities(std::span<const double> sims, std::size_t owner,
                                 std::size_t n_real) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < n_real; ++k) {
    if (k == owner) continue;
    sum += sims[k];
    ++count;
  }
  if (count < 2) return kNegInf;
  return sum / static_cast<double>(count);
}

}  // namespace

double compute_epsilon(std::size_t owner, const PassageMatrix& matrix, const Metric& metric) {
  std::vector<double> sims(matrix.n_real, 0.0);
  for (std::size_t k = 0; k < matrix.n_real; ++k) {
    if (k == owner) continue;
    sims[k] = similarity(metric, matrix.col(k), matrix.col(owner));
  }
  return epsilon_from_similarities(sims, owner, matrix.n_real);
}

std::vector<SupportSet> compute_support_sets(const PassageMatrix& matrix, const Metric& metric) {
  const std::size_t n = matrix.n_cols();
  std::vector<std::vector<double>> sim(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      sim[i][j] = sim[j][i] = similarity(metric, matrix.col(i), matrix.col(j));

  std::vector<SupportSet> sets;
  sets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SupportSet set;
    set.owner = static_cast<std::uint32_t>(i);
    set.epsilon = epsilon_from_similarities(sim[i], i, matrix.n_real);
    for (std::size_t s = 0; s < n; ++s) {
      if (s == i) continue;
      if (sim[i][s] > set.epsilon) set.members.push_back(static_cast<std::uint32_t>(s));
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

CentralityRanking rank_passages(std::span<const SupportSet> support_sets,
                                const PassageMatrix& matrix) {
  CentralityRanking ranking;
  ranking.scores.assign(matrix.n_real, 0);
  for (const SupportSet& set : support_sets)
    for (std::uint32_t member : set.members)
      if (member < matrix.n_real) ++ranking.scores[member];

  ranking.order.resize(matrix.n_real);
  std::iota(ranking.order.begin(), ranking.order.end(), 0u);
  std::sort(ranking.order.begin(), ranking.order.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              if (ranking.scores[a] != ranking.scores[b])
                return ranking.scores[a] > ranking.scores[b];
              return a < b;
            });
  return ranking;
}

RankedSummary select_by_order(std::span<const std::uint32_t> order,
                              std::span<const int> scores,
                              std::span<const Passage> passages, int budget_words) {
  if (budget_words < 1) throw DomainError("word budget must be >= 1");
  RankedSummary summary;
  summary.budget_words = budget_words;

  int remaining = budget_words;
  std::vector<std::uint32_t> selected;
  for (std::uint32_t idx : order) {
    const Passage& p = passages[idx];
    if (p.word_count <= remaining) {
      selected.push_back(idx);
      remaining -= p.word_count;
    }
  }
  if (selected.empty() && !passages.empty())
    warn("budget of " + std::to_string(budget_words) + " words fits no passage");

  std::sort(selected.begin(), selected.end());  // back to source order
  for (std::uint32_t idx : selected) {
    summary.passages.push_back(passages[idx]);
    summary.scores.push_back(idx < scores.size() ? scores[idx] : 0);
    summary.total_words += passages[idx].word_count;
  }
  return summary;
}

RankedSummary extract_summary(const CentralityRanking& ranking,
                              std::span<const Passage> passages, int budget_words) {
  return select_by_order(ranking.order, ranking.scores, passages, budget_words);
}

}  // namespace kpsumm
