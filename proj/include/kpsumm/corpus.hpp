#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace kpsumm {

// A sentence-level extraction unit. (doc_id, index) is unique within a
// cluster; word_count counts surface whitespace tokens, not normalized
// tokens.
struct Passage {
  std::string doc_id;
  int index = 0;
  std::string text;
  std::vector<std::string> tokens;
  int word_count = 0;
};

struct Document {
  std::string id;
  std::int64_t order_key = 0;  // packed timestamp or ordinal; smaller = earlier
  std::string raw_text;
  std::vector<Passage> passages;

  int total_words() const;
};

// The multi-document input unit. Documents are kept in chronological
// order (order_key ascending, ties by id).
struct Cluster {
  std::string id;
  std::vector<Document> documents;
  std::optional<std::string> query;
  std::vector<std::string> references;

  // Passages of all documents concatenated in document order.
  std::vector<Passage> all_passages() const;
};

// Segments and tokenizes raw text into passages. Chunks that carry no
// tokens (pure punctuation) are folded into a neighbouring passage so
// every passage has at least one token and no non-whitespace character
// is lost. Throws InputError when the text has no tokens at all.
Document make_document(std::string id, std::int64_t order_key, std::string raw_text);

// Loads a cluster directory:
//   <cluster>/docs/*.txt      one UTF-8 document per file
//   <cluster>/manifest.tsv    optional "filename<TAB>ISO-8601 date" lines;
//                             unlisted files sort after listed ones,
//                             lexicographically
//   <cluster>/query.txt       optional single-line query
//   <cluster>/refs/*.txt      zero or more reference summaries
// Missing docs/ or an unreadable file is fatal; empty documents are
// skipped with a warning.
Cluster load_cluster(const std::filesystem::path& dir);

// Packs an ISO-8601 date or date-time ("1998-02-12", "1998-02-12T10:30:00")
// into a sortable integer. Throws InputError on malformed input.
std::int64_t parse_iso8601_key(const std::string& value);

}  // namespace kpsumm
