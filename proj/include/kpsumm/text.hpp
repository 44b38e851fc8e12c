#pragma once

#include <string>
#include <vector>

namespace kpsumm {

// Lowercased alphanumeric tokens. Any byte that is not [a-z0-9] after
// ASCII lowercasing acts as a separator, except bytes >= 0x80, which are
// kept verbatim so multi-byte UTF-8 words survive intact.
std::vector<std::string> tokenize(const std::string& text);

// Deterministic rule-based sentence segmentation. Splits after terminal
// punctuation (., !, ?) followed by whitespace and an uppercase letter,
// quote or digit; a stop-list of abbreviations and single-letter initials
// suppresses splits at '.'; blank lines always split. Returned passages
// are trimmed and non-empty. Text without terminal punctuation comes back
// as a single passage.
std::vector<std::string> segment_passages(const std::string& raw_text);

// Whitespace-token count of the original surface text.
int count_words(const std::string& text);

std::string trim(const std::string& s);

}  // namespace kpsumm
