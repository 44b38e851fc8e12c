#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

namespace kpsumm {

// Stop-word lookup for key-phrase boundary filtering. Words are plain
// lowercase tokens aligned with tokenize() output (contractions appear
// as their split pieces: "don", "t", ...).
class Stopwords {
 public:
  Stopwords() = default;
  explicit Stopwords(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  bool contains(const std::string& word) const { return words_.count(word) > 0; }
  std::size_t size() const { return words_.size(); }

  // The built-in English list. Mirrors data/stopwords_en.txt, whose
  // FNV-1a checksum is pinned below and verified by the test suite.
  static const Stopwords& english();

  // One word per line; blank lines and lines starting with '#' ignored.
  static Stopwords load(const std::filesystem::path& path);

 private:
  std::unordered_set<std::string> words_;
};

std::uint64_t fnv1a64(std::string_view bytes);

// Frozen checksum of data/stopwords_en.txt.
inline constexpr std::uint64_t kStopwordsFileChecksum = 0x86387e29ce692ef3ULL;

}  // namespace kpsumm
