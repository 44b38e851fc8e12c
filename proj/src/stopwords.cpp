#include "kpsumm/stopwords.hpp"

#include <fstream>
#include <sstream>

#include "kpsumm/common.hpp"
#include "kpsumm/text.hpp"

namespace kpsumm {

namespace {

constexpr const char* kEnglishWords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am",
    "an", "and", "any", "are", "aren", "as", "at", "be",
    "because", "been", "before", "being", "below", "between", "both", "but",
    "by", "can", "cannot", "could", "couldn", "d", "did", "didn",
    "do", "does", "doesn", "doing", "don", "down", "during", "each",
    "few", "for", "from", "further", "had", "hadn", "has", "hasn",
    "have", "haven", "having", "he", "her", "here", "hers", "herself",
    "him", "himself", "his", "how", "i", "if", "in", "into",
    "is", "isn", "it", "its", "itself", "just", "ll", "m",
    "me", "might", "more", "most", "must", "mustn", "my", "myself",
    "no", "nor", "not", "now", "o", "of", "off", "on",
    "once", "only", "or", "other", "our", "ours", "ourselves", "out",
    "over", "own", "re", "s", "same", "shan", "she", "should",
    "shouldn", "so", "some", "such", "t", "than", "that", "the",
    "their", "theirs", "them", "themselves", "then", "there", "these", "they",
    "this", "those", "through", "to", "too", "under", "until", "up",
    "ve", "very", "was", "wasn", "we", "were", "weren", "what",
    "when", "where", "which", "while", "who", "whom", "why", "will",
    "with", "won", "would", "wouldn", "y", "you", "your", "yours",
    "yourself", "yourselves",
};

}  // namespace

const Stopwords& Stopwords::english() {
  static const Stopwords instance = [] {
    std::unordered_set<std::string> words;
    for (const char* w : kEnglishWords) words.insert(w);
    return Stopwords(std::move(words));
  }();
  return instance;
}

Stopwords Stopwords::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read stop-word list: " + path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    words.insert(line);
  }
  if (words.empty()) throw InputError("stop-word list is empty: " + path.string());
  return Stopwords(std::move(words));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace kpsumm
