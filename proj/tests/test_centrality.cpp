#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "kpsumm/centrality.hpp"
#include "kpsumm/common.hpp"
#include "kpsumm/metrics.hpp"
#include "kpsumm/text.hpp"
#include "kpsumm/vectorspace.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using kpsumm::CentralityRanking;
using kpsumm::ColumnKind;
using kpsumm::compute_epsilon;
using kpsumm::compute_support_sets;
using kpsumm::DomainError;
using kpsumm::extract_summary;
using kpsumm::Metric;
using kpsumm::Passage;
using kpsumm::PassageMatrix;
using kpsumm::parse_metric;
using kpsumm::rank_passages;
using kpsumm::RankedSummary;
using kpsumm::select_by_order;
using kpsumm::SupportSet;
using kpsumm::WeightedVector;

namespace {

// Single-term columns are enough to stage exact manhattan distances.
PassageMatrix manual_matrix(const std::vector<double>& weights, std::size_t n_real) {
  PassageMatrix matrix;
  matrix.n_real = n_real;
  matrix.vocab.terms = {"t0"};
  matrix.vocab.term_index["t0"] = 0;
  matrix.vocab.document_frequency = {1};
  matrix.vocab.n_passages = n_real;
  for (std::size_t c = 0; c < weights.size(); ++c) {
    matrix.columns.push_back(WeightedVector({{0u, weights[c]}}));
    matrix.kinds.push_back(c < n_real ? ColumnKind::real : ColumnKind::keyphrase);
  }
  return matrix;
}

Passage make_passage(int index, int words) {
  Passage p;
  p.doc_id = "d";
  p.index = index;
  for (int w = 0; w < words; ++w) {
    if (w > 0) p.text += ' ';
    p.text += "w" + std::to_string(index);
  }
  p.tokens = kpsumm::tokenize(p.text);
  p.word_count = words;
  return p;
}

std::vector<std::uint32_t> members_of(const SupportSet& set) { return set.members; }

}  // namespace

TEST_CASE("epsilon is the mean similarity to the other real passages") {
  // Distances from the owner: 1 and 3, so the threshold sits at -2 and
  // only the closer column clears it.
  PassageMatrix matrix = manual_matrix({3.0, 2.0, 6.0}, 3);
  Metric manhattan = Metric::manhattan();
  CHECK(compute_epsilon(0, matrix, manhattan) == -2.0);

  auto sets = compute_support_sets(matrix, manhattan);
  REQUIRE(sets.size() == 3);
  CHECK(sets[0].epsilon == -2.0);
  CHECK(members_of(sets[0]) == std::vector<std::uint32_t>{1});
}

TEST_CASE("equidistant candidates leave the support set empty") {
  PassageMatrix matrix = manual_matrix({3.0, 2.0, 4.0}, 3);  // both at distance 1
  auto sets = compute_support_sets(matrix, Metric::manhattan());
  CHECK(sets[0].epsilon == -1.0);
  CHECK(sets[0].members.empty());
}

TEST_CASE("two passages degenerate to mutual support") {
  PassageMatrix matrix = manual_matrix({1.0, 2.0}, 2);
  auto sets = compute_support_sets(matrix, Metric::manhattan());
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].epsilon == -std::numeric_limits<double>::infinity());
  CHECK(sets[1].epsilon == -std::numeric_limits<double>::infinity());
  CHECK(members_of(sets[0]) == std::vector<std::uint32_t>{1});
  CHECK(members_of(sets[1]) == std::vector<std::uint32_t>{0});

  auto ranking = rank_passages(sets, matrix);
  CHECK(ranking.scores == std::vector<int>{1, 1});
  CHECK(ranking.order == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("artificial columns vote but are never ranked") {
  // Three real passages plus one artificial column that duplicates the
  // first passage exactly.
  PassageMatrix matrix = manual_matrix({3.0, 2.0, 6.0, 3.0}, 3);
  auto sets = compute_support_sets(matrix, Metric::manhattan());
  REQUIRE(sets.size() == 4);

  CHECK(sets[0].epsilon == -2.0);
  CHECK(members_of(sets[0]) == std::vector<std::uint32_t>{1, 3});  // the clone is a member
  CHECK(sets[1].epsilon == -2.5);
  CHECK(members_of(sets[1]) == std::vector<std::uint32_t>{0, 3});
  CHECK(sets[2].epsilon == -3.5);
  CHECK(members_of(sets[2]) == std::vector<std::uint32_t>{0, 3});
  // The artificial owner thresholds against all three real columns.
  CHECK(sets[3].epsilon == doctest::Approx(-4.0 / 3.0).epsilon(1e-15));
  CHECK(members_of(sets[3]) == std::vector<std::uint32_t>{0, 1});

  auto ranking = rank_passages(sets, matrix);
  REQUIRE(ranking.scores.size() == 3);  // never the artificial column
  CHECK(ranking.scores == std::vector<int>{3, 2, 0});
  CHECK(ranking.order == std::vector<std::uint32_t>{0, 1, 2});
  for (std::uint32_t idx : ranking.order) CHECK(idx < 3);
}

TEST_CASE("count ties fall back to document order") {
  PassageMatrix matrix = manual_matrix({1.0, 2.0, 30.0, 31.0}, 4);
  auto sets = compute_support_sets(matrix, Metric::manhattan());
  auto ranking = rank_passages(sets, matrix);
  // The two near pairs support each other symmetrically.
  CHECK(ranking.scores[0] == ranking.scores[1]);
  CHECK(ranking.scores[2] == ranking.scores[3]);
  for (std::size_t i = 0; i + 1 < ranking.order.size(); i += 2)
    CHECK(ranking.order[i] < ranking.order[i + 1]);
}

TEST_CASE("library ranking matches the dense brute-force reference exactly") {
  testsupport::SplitMix rng(31337);
  const std::vector<std::string> names = {"cosine",    "euclidean", "manhattan",
                                          "chebyshev", "frac133",   "js"};
  for (int round = 0; round < 300; ++round) {
    PassageMatrix matrix = testsupport::random_matrix(rng, 6, 3, 10);
    oracle::DenseInstance inst = testsupport::densify(matrix);
    for (const std::string& name : names) {
      Metric metric = parse_metric(name);
      auto sets = compute_support_sets(matrix, metric);
      auto expected_sets = oracle::support_sets(inst, name);
      REQUIRE(sets.size() == inst.columns.size());
      for (std::size_t owner = 0; owner < sets.size(); ++owner) {
        CHECK(sets[owner].owner == owner);
        CHECK(sets[owner].epsilon == oracle::epsilon_of(inst, name, owner));
        REQUIRE(sets[owner].members.size() == expected_sets[owner].size());
        for (std::size_t k = 0; k < expected_sets[owner].size(); ++k)
          CHECK(sets[owner].members[k] == expected_sets[owner][k]);
      }
      auto ranking = rank_passages(sets, matrix);
      auto expected = oracle::rank(inst, name);
      CHECK(ranking.scores == expected.counts);
      REQUIRE(ranking.order.size() == expected.order.size());
      for (std::size_t k = 0; k < expected.order.size(); ++k)
        CHECK(ranking.order[k] == expected.order[k]);
    }
  }
}

TEST_CASE("uniform scaling never changes the ranking") {
  testsupport::SplitMix rng(51);
  const std::vector<Metric> metrics = {Metric::manhattan(), Metric::euclidean(),
                                       Metric::chebyshev(), Metric::frac133(),
                                       Metric::cosine()};
  for (int round = 0; round < 100; ++round) {
    PassageMatrix matrix = testsupport::random_matrix(rng, 5, 2, 8);
    for (double factor : {4.0, 0.25}) {
      PassageMatrix scaled = matrix;
      for (auto& column : scaled.columns) column = column.scaled(factor);
      for (const Metric& metric : metrics) {
        auto base = rank_passages(compute_support_sets(matrix, metric), matrix);
        auto after = rank_passages(compute_support_sets(scaled, metric), scaled);
        CHECK(base.scores == after.scores);
        CHECK(base.order == after.order);
      }
    }
  }
}

TEST_CASE("select_by_order fills the budget greedily and restores source order") {
  std::vector<Passage> passages = {make_passage(0, 10), make_passage(1, 10),
                                   make_passage(2, 10)};
  std::vector<std::uint32_t> order = {2, 0, 1};
  std::vector<int> scores = {5, 4, 9};

  RankedSummary summary = select_by_order(order, scores, passages, 25);
  REQUIRE(summary.passages.size() == 2);
  CHECK(summary.passages[0].index == 0);  // source order, not rank order
  CHECK(summary.passages[1].index == 2);
  CHECK(summary.scores == std::vector<int>{5, 9});
  CHECK(summary.total_words == 20);
  CHECK(summary.budget_words == 25);
}

TEST_CASE("select_by_order skips oversized passages instead of stopping") {
  std::vector<Passage> passages = {make_passage(0, 30), make_passage(1, 10)};
  std::vector<std::uint32_t> order = {0, 1};
  RankedSummary summary = select_by_order(order, {}, passages, 20);
  REQUIRE(summary.passages.size() == 1);
  CHECK(summary.passages[0].index == 1);
  CHECK(summary.total_words == 10);
}

TEST_CASE("select_by_order saturates when the budget covers everything") {
  std::vector<Passage> passages = {make_passage(0, 7), make_passage(1, 9),
                                   make_passage(2, 4)};
  std::vector<std::uint32_t> order = {1, 2, 0};
  RankedSummary summary = select_by_order(order, {}, passages, 1000);
  CHECK(summary.passages.size() == 3);
  CHECK(summary.total_words == 20);
  for (std::size_t i = 1; i < summary.passages.size(); ++i)
    CHECK(summary.passages[i - 1].index < summary.passages[i].index);
}

TEST_CASE("select_by_order edge cases") {
  std::vector<Passage> passages = {make_passage(0, 10)};
  std::vector<std::uint32_t> order = {0};

  CHECK_THROWS_AS(select_by_order(order, {}, passages, 0), DomainError);
  CHECK_THROWS_AS(select_by_order(order, {}, passages, -3), DomainError);

  RankedSummary none = select_by_order(order, {}, passages, 5);
  CHECK(none.passages.empty());
  CHECK(none.total_words == 0);
}

TEST_CASE("extract_summary honors centrality order") {
  PassageMatrix matrix = manual_matrix({3.0, 2.0, 6.0}, 3);
  auto ranking = rank_passages(compute_support_sets(matrix, Metric::manhattan()), matrix);
  std::vector<Passage> passages = {make_passage(0, 10), make_passage(1, 10),
                                   make_passage(2, 10)};
  RankedSummary summary = extract_summary(ranking, passages, 20);
  REQUIRE(summary.passages.size() == 2);
  // Top-2 by centrality, then re-sorted to source order.
  int lo = static_cast<int>(std::min(ranking.order[0], ranking.order[1]));
  int hi = static_cast<int>(std::max(ranking.order[0], ranking.order[1]));
  CHECK(summary.passages[0].index == lo);
  CHECK(summary.passages[1].index == hi);
  CHECK(summary.total_words == 20);
}
