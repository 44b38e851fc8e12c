#include "kpsumm/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "kpsumm/common.hpp"
#include "kpsumm/text.hpp"

namespace fs = std::filesystem;

namespace kpsumm {

int Document::total_words() const {
  int total = 0;
  for (const Passage& p : passages) total += p.word_count;
  return total;
}

std::vector<Passage> Cluster::all_passages() const {
  std::vector<Passage> out;
  for (const Document& doc : documents)
    out.insert(out.end(), doc.passages.begin(), doc.passages.end());
  return out;
}

Document make_document(std::string id, std::int64_t order_key, std::string raw_text) {
  Document doc;
  doc.id = std::move(id);
  doc.order_key = order_key;
  doc.raw_text = std::move(raw_text);

  std::string pending;  // token-less chunks waiting for a host passage
  for (std::string& text : segment_passages(doc.raw_text)) {
    if (!pending.empty()) {
      text = pending + " " + text;
      pending.clear();
    }
    std::vector<std::string> tokens = tokenize(text);
    if (tokens.empty()) {
      if (!doc.passages.empty()) {
        Passage& prev = doc.passages.back();
        prev.text += " " + text;
        prev.word_count = count_words(prev.text);
      } else {
        pending = text;
      }
      continue;
    }
    Passage p;
    p.doc_id = doc.id;
    p.index = static_cast<int>(doc.passages.size());
    p.text = std::move(text);
    p.tokens = std::move(tokens);
    p.word_count = count_words(p.text);
    doc.passages.push_back(std::move(p));
  }
  if (doc.passages.empty())
    throw InputError("document '" + doc.id + "' contains no tokens");
  return doc;
}

std::int64_t parse_iso8601_key(const std::string& value) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  int consumed = 0;
  if (std::sscanf(value.c_str(), "%4d-%2d-%2d%n", &y, &mo, &d, &consumed) != 3)
    throw InputError("malformed ISO-8601 date: '" + value + "'");
  std::string rest = trim(value.substr(static_cast<size_t>(consumed)));
  if (!rest.empty()) {
    if (rest[0] == 'T' || rest[0] == ' ') rest.erase(0, 1);
    if (std::sscanf(rest.c_str(), "%2d:%2d:%2d", &h, &mi, &s) < 2)
      throw InputError("malformed ISO-8601 time: '" + value + "'");
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 ||
      mi > 59 || s < 0 || s > 60)
    throw InputError("out-of-range ISO-8601 date: '" + value + "'");
  std::int64_t key = y;
  key = key * 100 + mo;
  key = key * 100 + d;
  key = key * 100 + h;
  key = key * 100 + mi;
  key = key * 100 + s;
  return key;
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("cannot read file: " + path.string());
  return buf.str();
}

std::vector<fs::path> sorted_txt_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  return files;
}

// filename -> packed date key
std::map<std::string, std::int64_t> read_manifest(const fs::path& path) {
  std::map<std::string, std::int64_t> entries;
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw InputError(path.string() + ":" + std::to_string(lineno) +
                       ": expected 'filename<TAB>date'");
    std::string name = trim(line.substr(0, tab));
    std::string date = trim(line.substr(tab + 1));
    if (name.empty() || date.empty())
      throw InputError(path.string() + ":" + std::to_string(lineno) +
                       ": expected 'filename<TAB>date'");
    entries[name] = parse_iso8601_key(date);
  }
  return entries;
}

}  // namespace

Cluster load_cluster(const fs::path& dir) {
  fs::path root = dir;
  if (root.filename().empty()) root = root.parent_path();

  Cluster cluster;
  cluster.id = root.filename().string();

  fs::path docs_dir = root / "docs";
  if (!fs::is_directory(docs_dir))
    throw InputError("cluster '" + root.string() + "' has no docs/ directory");

  std::map<std::string, std::int64_t> manifest;
  fs::path manifest_path = root / "manifest.tsv";
  if (fs::exists(manifest_path)) manifest = read_manifest(manifest_path);
  for (const auto& [name, key] : manifest) {
    (void)key;
    if (!fs::exists(docs_dir / name))
      warn("manifest entry '" + name + "' has no matching file in " + docs_dir.string());
  }

  for (const fs::path& file : sorted_txt_files(docs_dir)) {
    std::string text = read_file(file);
    if (trim(text).empty()) {
      warn("skipping empty document: " + file.string());
      continue;
    }
    std::string filename = file.filename().string();
    auto it = manifest.find(filename);
    std::int64_t key =
        it != manifest.end() ? it->second : std::numeric_limits<std::int64_t>::max();
    try {
      cluster.documents.push_back(
          make_document(file.stem().string(), key, std::move(text)));
    } catch (const InputError&) {
      warn("skipping document without tokens: " + file.string());
    }
  }
  if (cluster.documents.empty())
    throw InputError("cluster '" + root.string() + "' has no usable documents");

  std::sort(cluster.documents.begin(), cluster.documents.end(),
            [](const Document& a, const Document& b) {
              if (a.order_key != b.order_key) return a.order_key < b.order_key;
              return a.id < b.id;
            });

  fs::path query_path = root / "query.txt";
  if (fs::exists(query_path)) {
    std::istringstream in(read_file(query_path));
    std::string line;
    std::getline(in, line);
    line = trim(line);
    if (line.empty())
      warn("empty query.txt ignored in " + root.string());
    else
      cluster.query = line;
  }

  fs::path refs_dir = root / "refs";
  if (fs::is_directory(refs_dir)) {
    for (const fs::path& file : sorted_txt_files(refs_dir)) {
      std::string text = read_file(file);
      if (trim(text).empty()) {
        warn("skipping empty reference: " + file.string());
        continue;
      }
      cluster.references.push_back(std::move(text));
    }
  }
  return cluster;
}

}  // namespace kpsumm
