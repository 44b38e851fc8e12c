#include "kpsumm/text.hpp"

#include <cctype>
#include <unordered_set>

namespace kpsumm {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Titles, latinisms and calendar abbreviations that end with '.' without
// ending the sentence. Single-letter initials are handled separately.
const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> set = {
      "mr",   "mrs",  "ms",   "dr",   "prof", "rev",  "gen",  "sen",
      "rep",  "gov",  "pres", "st",   "jr",   "sr",   "vs",   "etc",
      "eg",   "ie",   "cf",   "al",   "inc",  "ltd",  "co",   "corp",
      "dept", "univ", "assn", "ave",  "blvd", "rd",   "mt",   "ft",
      "no",   "vol",  "fig",  "sec",  "art",  "pp",   "op",   "approx",
      "est",  "jan",  "feb",  "mar",  "apr",  "jun",  "jul",  "aug",
      "sep",  "sept", "oct",  "nov",  "dec",  "mon",  "tue",  "tues",
      "wed",  "thu",  "thur", "thurs", "fri", "sat",  "sun"};
  return set;
}

// Matches one closing quote/bracket at s[pos]; returns its byte length, 0 if none.
size_t closer_len(const std::string& s, size_t pos) {
  char c = s[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  // U+201D and U+2019
  if (pos + 2 < s.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(s[pos + 1]) == 0x80) {
    unsigned char b = static_cast<unsigned char>(s[pos + 2]);
    if (b == 0x9D || b == 0x99) return 3;
  }
  return 0;
}

// A new sentence may start with an uppercase letter, a digit, or an
// opening quote.
bool starts_sentence(const std::string& s, size_t pos) {
  char c = s[pos];
  if (is_upper(c) || is_digit(c) || c == '"' || c == '\'') return true;
  // U+201C and U+2018
  if (pos + 2 < s.size() && static_cast<unsigned char>(c) == 0xE2 &&
      static_cast<unsigned char>(s[pos + 1]) == 0x80) {
    unsigned char b = static_cast<unsigned char>(s[pos + 2]);
    if (b == 0x9C || b == 0x98) return true;
  }
  return false;
}

// Split suppression for '.': the preceding word is a known abbreviation
// or a single-letter initial ("U.S.", "J. Smith", "a.m.").
bool abbreviation_guard(const std::string& s, size_t dot) {
  size_t end = dot;
  size_t begin = end;
  while (begin > 0 && is_alpha(s[begin - 1])) --begin;
  if (begin == end) return false;
  if (end - begin == 1) return true;
  std::string word;
  word.reserve(end - begin);
  for (size_t i = begin; i < end; ++i)
    word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(s[i]))));
  return abbreviations().count(word) > 0;
}

std::vector<std::string> split_paragraph(const std::string& par) {
  std::vector<std::string> out;
  const size_t n = par.size();
  size_t start = 0;
  size_t i = 0;
  while (i < n) {
    if (!is_terminal(par[i])) {
      ++i;
      continue;
    }
    size_t punct_begin = i;
    size_t j = i;
    while (j < n && is_terminal(par[j])) ++j;
    size_t k = j;
    while (k < n) {
      size_t len = closer_len(par, k);
      if (len == 0) break;
      k += len;
    }
    size_t w = k;
    while (w < n && is_space(par[w])) ++w;
    if (w > k && w < n && starts_sentence(par, w)) {
      bool guarded = par[punct_begin] == '.' && j - punct_begin == 1 &&
                     abbreviation_guard(par, punct_begin);
      if (!guarded) {
        std::string piece = trim(par.substr(start, k - start));
        if (!piece.empty()) out.push_back(std::move(piece));
        start = w;
        i = w;
        continue;
      }
    }
    i = j;
  }
  std::string piece = trim(par.substr(start));
  if (!piece.empty()) out.push_back(std::move(piece));
  return out;
}

}  // namespace

std::string trim(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    unsigned char b = static_cast<unsigned char>(c);
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || b >= 0x80) {
      current.push_back(c);
    } else if (c >= 'A' && c <= 'Z') {
      current.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> segment_passages(const std::string& raw_text) {
  // Paragraphs first: a line holding only whitespace separates them.
  std::vector<std::string> paragraphs;
  std::string current;
  size_t i = 0;
  const size_t n = raw_text.size();
  while (i <= n) {
    size_t eol = raw_text.find('\n', i);
    std::string line = raw_text.substr(i, eol == std::string::npos ? std::string::npos : eol - i);
    if (trim(line).empty()) {
      if (!trim(current).empty()) paragraphs.push_back(current);
      current.clear();
    } else {
      if (!current.empty()) current.push_back('\n');
      current += line;
    }
    if (eol == std::string::npos) break;
    i = eol + 1;
  }
  if (!trim(current).empty()) paragraphs.push_back(current);

  std::vector<std::string> passages;
  for (const std::string& par : paragraphs) {
    std::vector<std::string> pieces = split_paragraph(par);
    passages.insert(passages.end(), pieces.begin(), pieces.end());
  }
  return passages;
}

int count_words(const std::string& text) {
  int count = 0;
  bool in_word = false;
  for (char c : text) {
    if (is_space(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++count;
    }
  }
  return count;
}

}  // namespace kpsumm
