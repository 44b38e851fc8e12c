#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "kpsumm/corpus.hpp"
#include "kpsumm/keyphrase.hpp"
#include "kpsumm/stopwords.hpp"
#include "kpsumm/vectorspace.hpp"
#include "support/generators.hpp"

using kpsumm::build_vocabulary;
using kpsumm::Document;
using kpsumm::extract_document_keyphrases;
using kpsumm::filter_keyphrases_for_text;
using kpsumm::fuse_keyphrases;
using kpsumm::KeyphraseSet;
using kpsumm::make_document;
using kpsumm::ScoredPhrase;
using kpsumm::Stopwords;

namespace {

Stopwords tiny_stopwords() {
  return Stopwords(std::unordered_set<std::string>{"the", "is", "a", "of"});
}

std::vector<std::string> phrases_of(const std::vector<ScoredPhrase>& scored) {
  std::vector<std::string> out;
  for (const auto& sp : scored) out.push_back(sp.phrase);
  return out;
}

bool has_phrase(const std::vector<ScoredPhrase>& scored, const std::string& phrase) {
  return std::any_of(scored.begin(), scored.end(),
                     [&](const ScoredPhrase& sp) { return sp.phrase == phrase; });
}

}  // namespace

TEST_CASE("candidates never start or end with a stop-word") {
  Document doc = make_document("d0", 0, "The line item veto is law.");
  auto vocab = build_vocabulary(doc.passages);
  auto scored = extract_document_keyphrases(doc, vocab, tiny_stopwords(), 50);

  CHECK(has_phrase(scored, "line item veto"));
  CHECK(has_phrase(scored, "line item"));
  CHECK(has_phrase(scored, "item veto"));
  CHECK(has_phrase(scored, "veto"));
  CHECK(has_phrase(scored, "law"));
  CHECK_FALSE(has_phrase(scored, "the line"));
  CHECK_FALSE(has_phrase(scored, "veto is"));
  CHECK_FALSE(has_phrase(scored, "is law"));
  CHECK_FALSE(has_phrase(scored, "the"));
  CHECK_FALSE(has_phrase(scored, "is"));
  CHECK_FALSE(has_phrase(scored, "the line item"));
  // Only the edges are constrained; interior stop-words are fine.
  CHECK(has_phrase(scored, "veto is law"));
}

TEST_CASE("phrase scores sum member token weights; ties break lexicographically") {
  Document doc = make_document("d0", 0, "The line item veto is law.");
  auto vocab = build_vocabulary(doc.passages);
  auto scored = extract_document_keyphrases(doc, vocab, tiny_stopwords(), 3);

  // Single passage: every term has df = 1 of 1 passage, so each token
  // weighs the same (the vocabulary is unfiltered, so "is" counts too)
  // and phrase score is proportional to phrase length.
  REQUIRE(scored.size() == 3);
  CHECK(scored[0].phrase == "line item veto");  // ties with "veto is law",
  CHECK(scored[1].phrase == "veto is law");     // lexicographic order decides
  CHECK(scored[2].phrase == "item veto");
  CHECK(scored[0].score == doctest::Approx(scored[1].score));
  CHECK(scored[0].score == doctest::Approx(scored[2].score * 1.5));
}

TEST_CASE("a candidate needs at least one alphabetic token") {
  Document digits = make_document("d0", 0, "42 17 9.");
  auto vocab = build_vocabulary(digits.passages);
  auto scored = extract_document_keyphrases(digits, vocab, tiny_stopwords(), 10);
  CHECK(scored.empty());

  Document mixed = make_document("d1", 0, "42 voto rounds.");
  auto vocab2 = build_vocabulary(mixed.passages);
  auto scored2 = extract_document_keyphrases(mixed, vocab2, tiny_stopwords(), 50);
  CHECK(has_phrase(scored2, "42 voto"));
  CHECK_FALSE(has_phrase(scored2, "42"));
}

TEST_CASE("single-token document yields that token") {
  Document doc = make_document("d0", 0, "Veto.");
  auto vocab = build_vocabulary(doc.passages);
  auto scored = extract_document_keyphrases(doc, vocab, tiny_stopwords(), 1);
  REQUIRE(scored.size() == 1);
  CHECK(scored[0].phrase == "veto");
  CHECK(scored[0].score > 0.0);
}

TEST_CASE("per_doc_n caps the returned candidates") {
  Document doc = make_document(
      "d0", 0, "Storm closed the harbor. The council met. Flood water rose fast.");
  auto vocab = build_vocabulary(doc.passages);
  auto all = extract_document_keyphrases(doc, vocab, tiny_stopwords(), 1000);
  auto top2 = extract_document_keyphrases(doc, vocab, tiny_stopwords(), 2);
  REQUIRE(all.size() > 2);
  REQUIRE(top2.size() == 2);
  CHECK(top2[0].phrase == all[0].phrase);
  CHECK(top2[1].phrase == all[1].phrase);
  // Scores arrive sorted descending.
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].score >= all[i].score);
}

TEST_CASE("fuse deduplicates, counts documents, and caps at k") {
  std::vector<std::vector<ScoredPhrase>> per_doc = {
      {{"storm surge", 5.0, 1}, {"harbor", 2.0, 1}},
      {{"storm surge", 3.0, 1}, {"council vote", 4.0, 1}},
  };
  KeyphraseSet fused = fuse_keyphrases(per_doc, 10);
  REQUIRE(fused.phrases.size() == 3);
  CHECK(fused.k == 10);
  // Seen in both documents, so it outranks higher-scored singletons.
  CHECK(fused.phrases[0].phrase == "storm surge");
  CHECK(fused.phrases[0].doc_count == 2);
  CHECK(fused.phrases[0].score == doctest::Approx(8.0));  // per-doc scores accumulate
  CHECK(fused.phrases[1].phrase == "council vote");
  CHECK(fused.phrases[2].phrase == "harbor");

  KeyphraseSet capped = fuse_keyphrases(per_doc, 2);
  REQUIRE(capped.phrases.size() == 2);
  CHECK(capped.phrases[0].phrase == "storm surge");
  CHECK(capped.phrases[1].phrase == "council vote");
}

TEST_CASE("fuse breaks doc_count and score ties lexicographically") {
  std::vector<std::vector<ScoredPhrase>> per_doc = {
      {{"zebra", 1.0, 1}, {"apple", 1.0, 1}, {"mango", 1.0, 1}},
  };
  KeyphraseSet fused = fuse_keyphrases(per_doc, 10);
  CHECK(phrases_of(fused.phrases) ==
        std::vector<std::string>{"apple", "mango", "zebra"});
}

TEST_CASE("filter keeps only phrases that occur contiguously") {
  Document doc = make_document("d0", 0, "The storm closed the harbor. Ships waited.");
  KeyphraseSet set;
  set.phrases = {{"storm closed", 3.0, 1},
                 {"storm harbor", 2.5, 1},   // both words present, never adjacent
                 {"ships waited", 2.0, 1},
                 {"storm closed the harbor", 1.5, 1},
                 {"flood", 1.0, 1}};
  auto kept = filter_keyphrases_for_text(set, doc.passages);
  CHECK(kept == std::vector<std::string>{"storm closed", "ships waited",
                                         "storm closed the harbor"});

  KeyphraseSet empty_set;
  CHECK(filter_keyphrases_for_text(empty_set, doc.passages).empty());
}

TEST_CASE("extracted phrases always re-match their own document") {
  testsupport::SplitMix rng(2024);
  const Stopwords& stop = Stopwords::english();
  for (int round = 0; round < 60; ++round) {
    Document doc = make_document(
        "d0", 0, testsupport::random_document_text(rng, 3, 8));
    auto vocab = build_vocabulary(doc.passages);
    auto scored = extract_document_keyphrases(doc, vocab, stop, 15);
    KeyphraseSet set;
    set.phrases = scored;
    auto kept = filter_keyphrases_for_text(set, doc.passages);
    // Every candidate was read off contiguous tokens of this document,
    // so the filter must keep all of them, in order.
    CHECK(kept == phrases_of(scored));
  }
}

TEST_CASE("built-in stop-word list matches the shipped data file") {
  const std::filesystem::path path =
      std::filesystem::path(KPSUMM_DATA_DIR) / "stopwords_en.txt";
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CHECK(kpsumm::fnv1a64(buffer.str()) == kpsumm::kStopwordsFileChecksum);

  Stopwords from_file = Stopwords::load(path);
  const Stopwords& builtin = Stopwords::english();
  CHECK(from_file.size() == builtin.size());
  for (const char* word : {"the", "is", "of", "and", "t", "don", "wouldn"}) {
    CHECK(builtin.contains(word));
    CHECK(from_file.contains(word));
  }
  for (const char* word : {"storm", "veto", "harbor"}) {
    CHECK_FALSE(builtin.contains(word));
    CHECK_FALSE(from_file.contains(word));
  }
}

TEST_CASE("fnv1a64 reference values") {
  // Standard FNV-1a test vectors.
  CHECK(kpsumm::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(kpsumm::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(kpsumm::fnv1a64("foobar") == 0x85944171f73967e8ULL);
}
