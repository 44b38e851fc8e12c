#include "kpsumm/keyphrase.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "kpsumm/common.hpp"
#include "kpsumm/text.hpp"

namespace kpsumm {

namespace {

bool has_alpha(const std::string& token) {
  for (char c : token) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
        static_cast<unsigned char>(c) >= 0x80)
      return true;
  }
  return false;
}

bool tokens_contain(const std::vector<std::string>& haystack,
                    const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (haystack[i + j] != needle[j]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

}  // namespace

std::vector<ScoredPhrase> extract_document_keyphrases(const Document& doc,
                                                      const Vocabulary& vocab,
                                                      const Stopwords& stopwords,
                                                      int per_doc_n) {
  if (per_doc_n < 1) throw DomainError("per_doc_n must be >= 1");

  // Document-level token weights: tf over the whole document, idf over
  // its passages.
  std::unordered_map<std::string, int> counts;
  for (const Passage& p : doc.passages)
    for (const std::string& token : p.tokens) ++counts[token];
  const double n = static_cast<double>(doc.passages.size());
  std::unordered_map<std::string, double> weight;
  weight.reserve(counts.size());
  for (const auto& [token, tf] : counts) {
    auto idx = vocab.find(token);
    if (!idx) continue;
    double idf = std::log((1.0 + n) / (1.0 + vocab.document_frequency[*idx])) + 1.0;
    weight[token] = tf * idf;
  }

  // Candidate n-grams never cross passage boundaries.
  std::map<std::string, double> candidates;
  for (const Passage& p : doc.passages) {
    const auto& toks = p.tokens;
    for (std::size_t len = 1; len <= 3; ++len) {
      if (toks.size() < len) continue;
      for (std::size_t i = 0; i + len <= toks.size(); ++i) {
        if (stopwords.contains(toks[i]) || stopwords.contains(toks[i + len - 1])) continue;
        bool alpha = false;
        for (std::size_t j = 0; j < len; ++j) alpha = alpha || has_alpha(toks[i + j]);
        if (!alpha) continue;
        std::string phrase = toks[i];
        double score = weight[toks[i]];
        for (std::size_t j = 1; j < len; ++j) {
          phrase += " " + toks[i + j];
          score += weight[toks[i + j]];
        }
        candidates.emplace(std::move(phrase), score);
      }
    }
  }
  if (candidates.empty()) {
    warn("document '" + doc.id + "' yielded no key-phrase candidates");
    return {};
  }

  std::vector<ScoredPhrase> ranked;
  ranked.reserve(candidates.size());
  for (const auto& [phrase, score] : candidates) ranked.push_back({phrase, score, 1});
  std::sort(ranked.begin(), ranked.end(), [](const ScoredPhrase& a, const ScoredPhrase& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.phrase < b.phrase;
  });
  if (ranked.size() > static_cast<std::size_t>(per_doc_n)) ranked.resize(per_doc_n);
  return ranked;
}

KeyphraseSet fuse_keyphrases(const std::vector<std::vector<ScoredPhrase>>& per_doc, int k) {
  if (k < 1) throw DomainError("keyphrase cap must be >= 1");
  struct Agg {
    double score = 0.0;
    int doc_count = 0;
  };
  std::map<std::string, Agg> fused;
  for (const auto& extraction : per_doc) {
    for (const ScoredPhrase& sp : extraction) {
      Agg& agg = fused[sp.phrase];
      agg.score += sp.score;
      agg.doc_count += 1;  // extractions are deduplicated per document
    }
  }
  KeyphraseSet set;
  set.k = k;
  set.phrases.reserve(fused.size());
  for (const auto& [phrase, agg] : fused)
    set.phrases.push_back({phrase, agg.score, agg.doc_count});
  std::sort(set.phrases.begin(), set.phrases.end(),
            [](const ScoredPhrase& a, const ScoredPhrase& b) {
              if (a.doc_count != b.doc_count) return a.doc_count > b.doc_count;
              if (a.score != b.score) return a.score > b.score;
              return a.phrase < b.phrase;
            });
  if (set.phrases.size() > static_cast<std::size_t>(k)) set.phrases.resize(k);
  return set;
}

std::vector<std::string> filter_keyphrases_for_text(const KeyphraseSet& set,
                                                    std::span<const Passage> passages) {
  std::vector<std::string> kept;
  for (const ScoredPhrase& sp : set.phrases) {
    std::vector<std::string> needle = tokenize(sp.phrase);
    if (needle.empty()) continue;
    for (const Passage& p : passages) {
      if (tokens_contain(p.tokens, needle)) {
        kept.push_back(sp.phrase);
        break;
      }
    }
  }
  return kept;
}

}  // namespace kpsumm
