#pragma once

#include <span>
#include <string>
#include <vector>

#include "kpsumm/corpus.hpp"
#include "kpsumm/stopwords.hpp"
#include "kpsumm/vectorspace.hpp"

namespace kpsumm {

struct ScoredPhrase {
  std::string phrase;  // space-joined normalized tokens
  double score = 0.0;
  int doc_count = 1;
};

// Fused cluster-level phrase ranking: sorted by (doc_count desc,
// score desc, phrase asc), capped at k entries.
struct KeyphraseSet {
  std::vector<ScoredPhrase> phrases;
  int k = 40;
};

// Candidate phrases are contiguous token 1-3-grams that neither begin nor
// end with a stop-word and contain at least one alphabetic token; each
// scores the sum of its member tokens' TF-IDF weight over the document.
// Returns the top per_doc_n by (score desc, phrase asc).
std::vector<ScoredPhrase> extract_document_keyphrases(const Document& doc,
                                                      const Vocabulary& vocab,
                                                      const Stopwords& stopwords,
                                                      int per_doc_n);

// Joins per-document extractions, deduplicates by exact phrase, counts the
// documents each phrase came from and keeps the top k.
KeyphraseSet fuse_keyphrases(const std::vector<std::vector<ScoredPhrase>>& per_doc, int k);

// Keeps the phrases whose token sequence occurs contiguously in at least
// one passage, preserving set order.
std::vector<std::string> filter_keyphrases_for_text(const KeyphraseSet& set,
                                                    std::span<const Passage> passages);

}  // namespace kpsumm
