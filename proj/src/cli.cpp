#include "kpsumm/cli.hpp"

#include <atomic>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpsumm/baselines.hpp"
#include "kpsumm/common.hpp"
#include "kpsumm/corpus.hpp"
#include "kpsumm/metrics.hpp"
#include "kpsumm/multidoc.hpp"
#include "kpsumm/rouge.hpp"
#include "kpsumm/stopwords.hpp"
#include "kpsumm/text.hpp"
#include "kpsumm/version.hpp"

namespace kpsumm::cli {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string strategy = "waterfall";
  std::string distance = "cosine";
  int budget_words = 250;
  int keyphrases = 40;
  std::string stopwords_path;
  bool no_query = false;
  double mmr_lambda = 0.5;
  std::string mmr_sim1 = "cosine";
  std::string mmr_sim2 = "cosine";
  int shuffle_trials = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string output_dir = ".";
  std::string report_path;  // empty -> <output>/report.tsv
  std::string compare;      // bench only
  std::string config_path;
  std::vector<std::string> clusters;
};

// Ranking mode: one of the document-order strategies, or a baseline
// ranker that bypasses support-set centrality.
struct ModeSpec {
  bool is_mmr = false;
  bool is_centroid = false;
  Strategy strategy = Strategy::waterfall;
};

ModeSpec parse_mode(const std::string& name) {
  ModeSpec mode;
  if (name == "mmr") {
    mode.is_mmr = true;
  } else if (name == "centroid") {
    mode.is_centroid = true;
  } else {
    mode.strategy = parse_strategy(name);
  }
  return mode;
}

// One report line: a summary produced for one cluster under one
// (strategy, metric) label, optionally written to a file and scored.
struct Row {
  std::string cluster;
  std::string label;
  std::string metric;
  std::string file;  // empty when no summary file was written
  int words = 0;
  double r1 = 0.0;
  double r2 = 0.0;
  bool scored = false;
};

struct MeanRow {
  std::string label;
  std::string metric;
  double r1 = 0.0;
  double r2 = 0.0;
};

std::string fmt4(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

// Collapses whitespace runs (including newlines) so a passage occupies
// exactly one line in the summary file.
std::string single_line(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool space_pending = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space_pending = !out.empty();
      continue;
    }
    if (space_pending) {
      out.push_back(' ');
      space_pending = false;
    }
    out.push_back(c);
  }
  return out;
}

void write_summary_file(const fs::path& path, const RankedSummary& summary) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write summary file " + path.generic_string());
  for (const Passage& passage : summary.passages) file << single_line(passage.text) << '\n';
}

// Runs fn(0..n-1), spreading the indices over up to `jobs` threads. The
// lowest-index exception is rethrown after all workers finish.
template <typename Fn>
void for_each_index(std::size_t n, int jobs, Fn&& fn) {
  std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  for (std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<Cluster> load_clusters(const std::vector<std::string>& paths) {
  std::vector<Cluster> clusters;
  clusters.reserve(paths.size());
  std::set<std::string> seen;
  for (const std::string& path : paths) {
    clusters.push_back(load_cluster(path));
    if (!seen.insert(clusters.back().id).second)
      throw InputError("duplicate cluster id '" + clusters.back().id +
                       "'; cluster directory names must be unique within a run");
  }
  return clusters;
}

Stopwords resolve_stopwords(const Options& opts, std::string& source) {
  if (!opts.stopwords_path.empty()) {
    source = opts.stopwords_path;
    return Stopwords::load(opts.stopwords_path);
  }
  source = "builtin";
  return Stopwords::english();
}

// Produces the summaries (and rows) for one cluster under one mode.
// shuffle_trials > 0 replaces the chronological run with per-trial rows.
std::vector<Row> process_cluster(const Cluster& cluster, const Options& opts,
                                 const ModeSpec& mode, const Stopwords& stopwords,
                                 int shuffle_trials, bool do_eval, bool write_files,
                                 const fs::path& outdir) {
  StrategyConfig cfg;
  if (!mode.is_mmr && !mode.is_centroid) cfg.strategy = mode.strategy;
  cfg.metric = parse_metric(opts.distance);
  cfg.budget_words = opts.budget_words;
  cfg.keyphrase_k = opts.keyphrases;
  cfg.use_query = !opts.no_query;
  cfg.seed = opts.seed ^ fnv1a64(cluster.id);

  std::string label = mode.is_mmr       ? "mmr"
                      : mode.is_centroid ? "centroid"
                                         : strategy_name(cfg.strategy);
  std::string metric_label = mode.is_mmr
                                 ? metric_name(parse_metric(opts.mmr_sim1))
                                 : mode.is_centroid ? metric_name(Metric::cosine())
                                                    : metric_name(cfg.metric);

  std::vector<Row> rows;
  auto add = [&](const std::string& row_label, const std::string& file_name,
                 const RankedSummary& summary) {
    Row row;
    row.cluster = cluster.id;
    row.label = row_label;
    row.metric = metric_label;
    row.words = summary.total_words;
    if (do_eval) {
      auto [r1, r2] = evaluate_cluster(summary, cluster);
      row.r1 = r1.recall;
      row.r2 = r2.recall;
      row.scored = true;
    }
    if (write_files) {
      write_summary_file(outdir / file_name, summary);
      row.file = file_name;
    }
    rows.push_back(std::move(row));
  };

  if (shuffle_trials > 0) {
    if (mode.is_mmr || mode.is_centroid)
      throw InputError(
          "shuffle trials permute document order; they apply to the "
          "single-layer, waterfall, and concat strategies only");
    std::vector<ShuffleTrial> trials = shuffled_trials(cluster, cfg, stopwords, shuffle_trials);
    for (std::size_t t = 0; t < trials.size(); ++t)
      add(label + "+shuffle/" + std::to_string(t + 1),
          cluster.id + ".trial" + std::to_string(t + 1) + ".summary.txt", trials[t].summary);
  } else if (mode.is_mmr) {
    MMRConfig mmr;
    mmr.lambda = opts.mmr_lambda;
    mmr.sim1 = parse_metric(opts.mmr_sim1);
    mmr.sim2 = parse_metric(opts.mmr_sim2);
    add(label, cluster.id + ".summary.txt", mmr_summarize(cluster, mmr, opts.budget_words));
  } else if (mode.is_centroid) {
    add(label, cluster.id + ".summary.txt", centroid_summarize(cluster, opts.budget_words));
  } else {
    add(label, cluster.id + ".summary.txt", run_strategy(cluster, cfg, stopwords));
  }
  return rows;
}

// "waterfall+shuffle/3" and "waterfall+shuffle/mean" aggregate under the
// same label; everything else groups as itself.
std::string group_label(const std::string& label) {
  const std::string marker = "+shuffle/";
  std::size_t pos = label.rfind(marker);
  if (pos == std::string::npos) return label;
  std::size_t start = pos + marker.size();
  if (start >= label.size()) return label;
  for (std::size_t i = start; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return label;
  return label.substr(0, start) + "mean";
}

std::vector<MeanRow> compute_means(const std::vector<Row>& rows) {
  std::vector<MeanRow> means;
  std::vector<int> counts;
  auto slot = [&](const std::string& label, const std::string& metric) -> std::size_t {
    for (std::size_t i = 0; i < means.size(); ++i)
      if (means[i].label == label && means[i].metric == metric) return i;
    means.push_back({label, metric, 0.0, 0.0});
    counts.push_back(0);
    return means.size() - 1;
  };
  for (const Row& row : rows) {
    std::size_t i = slot(group_label(row.label), row.metric);
    means[i].r1 += row.r1;
    means[i].r2 += row.r2;
    ++counts[i];
  }
  for (std::size_t i = 0; i < means.size(); ++i) {
    means[i].r1 /= counts[i];
    means[i].r2 /= counts[i];
  }
  return means;
}

std::string render_report(const std::vector<Row>& rows, const std::vector<MeanRow>& means) {
  std::string out = "cluster_id\tstrategy\tmetric\tR1\tR2\n";
  for (const Row& row : rows)
    out += row.cluster + '\t' + row.label + '\t' + row.metric + '\t' + fmt4(row.r1) + '\t' +
           fmt4(row.r2) + '\n';
  for (const MeanRow& mean : means)
    out += std::string("MEAN\t") + mean.label + '\t' + mean.metric + '\t' + fmt4(mean.r1) +
           '\t' + fmt4(mean.r2) + '\n';
  return out;
}

void write_text_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path.generic_string());
  file << content;
}

ordered_json config_snapshot(const Options& opts, const std::string& stopwords_source,
                             bool is_bench, int effective_trials) {
  ordered_json config;
  if (!is_bench) {
    config["strategy"] = opts.strategy;
    config["distance"] = metric_name(parse_metric(opts.distance));
  }
  config["budget_words"] = opts.budget_words;
  config["keyphrases"] = opts.keyphrases;
  config["use_query"] = !opts.no_query;
  if (!is_bench) {
    config["mmr_lambda"] = opts.mmr_lambda;
    config["mmr_sim1"] = metric_name(parse_metric(opts.mmr_sim1));
    config["mmr_sim2"] = metric_name(parse_metric(opts.mmr_sim2));
  }
  config["shuffle_trials"] = effective_trials;
  config["seed"] = opts.seed;
  config["jobs"] = opts.jobs;
  config["stopwords"] = stopwords_source;
  if (is_bench && !opts.compare.empty()) config["compare"] = opts.compare;
  return config;
}

void write_manifest(const fs::path& outdir, const std::string& command, ordered_json config,
                    std::uint64_t seed, const std::vector<Cluster>& clusters,
                    const std::vector<Row>& rows, const std::string& report_path) {
  ordered_json manifest;
  manifest["tool"] = "kpsumm";
  manifest["version"] = kVersion;
  manifest["command"] = command;
  manifest["seed"] = seed;
  manifest["config"] = std::move(config);
  ordered_json ids = ordered_json::array();
  for (const Cluster& cluster : clusters) ids.push_back(cluster.id);
  manifest["clusters"] = std::move(ids);
  ordered_json outputs = ordered_json::array();
  for (const Row& row : rows) {
    ordered_json entry;
    entry["cluster"] = row.cluster;
    entry["strategy"] = row.label;
    entry["metric"] = row.metric;
    if (!row.file.empty()) {
      entry["file"] = row.file;
      entry["words"] = row.words;
    }
    if (row.scored) {
      entry["r1"] = row.r1;
      entry["r2"] = row.r2;
    }
    outputs.push_back(std::move(entry));
  }
  manifest["outputs"] = std::move(outputs);
  if (!report_path.empty()) manifest["report"] = report_path;
  write_text_file(outdir / "manifest.json", manifest.dump(2) + "\n");
}

std::vector<Row> run_over_clusters(const std::vector<Cluster>& clusters, const Options& opts,
                                   const ModeSpec& mode, const Stopwords& stopwords,
                                   int shuffle_trials, bool do_eval, bool write_files,
                                   const fs::path& outdir) {
  std::vector<std::vector<Row>> per_cluster(clusters.size());
  for_each_index(clusters.size(), opts.jobs, [&](std::size_t i) {
    per_cluster[i] = process_cluster(clusters[i], opts, mode, stopwords, shuffle_trials,
                                     do_eval, write_files, outdir);
  });
  std::vector<Row> rows;
  for (std::vector<Row>& batch : per_cluster)
    for (Row& row : batch) rows.push_back(std::move(row));
  return rows;
}

int cmd_summarize(const Options& opts) {
  std::string stopwords_source;
  Stopwords stopwords = resolve_stopwords(opts, stopwords_source);
  std::vector<Cluster> clusters = load_clusters(opts.clusters);
  ModeSpec mode = parse_mode(opts.strategy);
  fs::path outdir = opts.output_dir;
  fs::create_directories(outdir);

  std::vector<Row> rows = run_over_clusters(clusters, opts, mode, stopwords,
                                            opts.shuffle_trials, false, true, outdir);
  for (const Row& row : rows)
    std::cout << row.cluster << ": " << row.words << " words -> "
              << (outdir / row.file).generic_string() << '\n';
  write_manifest(outdir, "summarize",
                 config_snapshot(opts, stopwords_source, false, opts.shuffle_trials),
                 opts.seed, clusters, rows, "");
  return 0;
}

int cmd_evaluate(const Options& opts) {
  std::string stopwords_source;
  Stopwords stopwords = resolve_stopwords(opts, stopwords_source);
  std::vector<Cluster> clusters = load_clusters(opts.clusters);
  ModeSpec mode = parse_mode(opts.strategy);
  fs::path outdir = opts.output_dir;
  fs::create_directories(outdir);

  std::vector<Row> rows = run_over_clusters(clusters, opts, mode, stopwords,
                                            opts.shuffle_trials, true, true, outdir);
  std::string report = render_report(rows, compute_means(rows));
  std::string report_path = opts.report_path.empty()
                                ? (outdir / "report.tsv").generic_string()
                                : opts.report_path;
  write_text_file(report_path, report);
  std::cout << report;
  write_manifest(outdir, "evaluate",
                 config_snapshot(opts, stopwords_source, false, opts.shuffle_trials),
                 opts.seed, clusters, rows, report_path);
  return 0;
}

struct BenchEntry {
  const char* strategy;
  const char* metric;
  bool shuffle;
};

constexpr BenchEntry kBenchMatrix[] = {
    {"concat", "frac133", false},      {"concat", "cosine", false},
    {"waterfall", "frac133", false},   {"single-layer", "frac133", false},
    {"waterfall", "cosine", false},    {"single-layer", "cosine", false},
    {"single-layer", "frac133", true}, {"waterfall", "cosine", true},
};

// Published reference scores for the two standard news collections,
// reported alongside our results for side-by-side inspection.
struct PublishedScore {
  const char* strategy;
  const char* metric;
  double r1;
  double r2;
};

constexpr PublishedScore kPublishedDuc2007[] = {
    {"concat", "frac133", 0.3565, 0.0744},
    {"concat", "cosine", 0.3406, 0.0670},
    {"waterfall", "frac133", 0.3569, 0.0765},
    {"single-layer", "frac133", 0.3775, 0.0882},
    {"waterfall", "cosine", 0.3701, 0.0904},
    {"single-layer", "cosine", 0.3707, 0.0822},
    {"single-layer+shuffle/mean", "frac133", 0.3689, 0.0807},
    {"waterfall+shuffle/mean", "cosine", 0.3626, 0.0844},
};

constexpr PublishedScore kPublishedTac2009[] = {
    {"concat", "frac133", 0.4706, 0.1268},
    {"concat", "cosine", 0.4746, 0.1391},
    {"waterfall", "frac133", 0.4943, 0.1441},
    {"single-layer", "frac133", 0.4983, 0.1526},
    {"waterfall", "cosine", 0.5137, 0.1693},
    {"single-layer", "cosine", 0.4993, 0.1590},
    {"single-layer+shuffle/mean", "frac133", 0.5060, 0.1483},
    {"waterfall+shuffle/mean", "cosine", 0.5107, 0.1630},
};

Row collapse_trials(const std::vector<Row>& trial_rows, const std::string& label) {
  Row mean;
  mean.cluster = trial_rows.front().cluster;
  mean.label = label;
  mean.metric = trial_rows.front().metric;
  for (const Row& row : trial_rows) {
    mean.r1 += row.r1;
    mean.r2 += row.r2;
  }
  mean.r1 /= static_cast<double>(trial_rows.size());
  mean.r2 /= static_cast<double>(trial_rows.size());
  mean.scored = true;
  return mean;
}

const MeanRow* find_mean(const std::vector<MeanRow>& means, const std::string& label,
                         const std::string& metric) {
  for (const MeanRow& mean : means)
    if (mean.label == label && mean.metric == metric) return &mean;
  return nullptr;
}

void print_ordering_checks(const std::vector<MeanRow>& means) {
  auto report = [&](const std::string& description, const MeanRow* lhs, const MeanRow* rhs,
                    bool strict_less) {
    if (lhs == nullptr || rhs == nullptr) return;
    bool ok = strict_less ? lhs->r1 < rhs->r1 : lhs->r1 >= rhs->r1;
    std::cout << "[ordering] " << description << ": " << (ok ? "ok" : "VIOLATION") << " ("
              << fmt4(lhs->r1) << (strict_less ? " < " : " >= ") << fmt4(rhs->r1) << ")\n";
  };
  for (const char* metric : {"frac133", "cosine"})
    for (const char* strategy : {"waterfall", "single-layer"})
      report(std::string(strategy) + " >= concat on R1 (" + metric + ")",
             find_mean(means, strategy, metric), find_mean(means, "concat", metric), false);
  report("shuffled single-layer < chronological on R1 (frac133)",
         find_mean(means, "single-layer+shuffle/mean", "frac133"),
         find_mean(means, "single-layer", "frac133"), true);
  report("shuffled waterfall < chronological on R1 (cosine)",
         find_mean(means, "waterfall+shuffle/mean", "cosine"),
         find_mean(means, "waterfall", "cosine"), true);
}

void print_comparison(const std::vector<MeanRow>& means, const std::string& dataset) {
  std::span<const PublishedScore> published =
      dataset == "duc2007" ? std::span<const PublishedScore>(kPublishedDuc2007)
                           : std::span<const PublishedScore>(kPublishedTac2009);
  std::cout << "\npublished reference scores (" << dataset << ")\n";
  char header[128];
  std::snprintf(header, sizeof header, "%-28s %-9s %7s %7s %8s %8s\n", "strategy", "metric",
                "R1", "R2", "ref_R1", "ref_R2");
  std::cout << header;
  for (const PublishedScore& ref : published) {
    const MeanRow* ours = find_mean(means, ref.strategy, ref.metric);
    char line[160];
    std::snprintf(line, sizeof line, "%-28s %-9s %7s %7s %8.4f %8.4f\n", ref.strategy,
                  ref.metric, ours ? fmt4(ours->r1).c_str() : "-",
                  ours ? fmt4(ours->r2).c_str() : "-", ref.r1, ref.r2);
    std::cout << line;
  }
}

int cmd_bench(const Options& opts, int trials) {
  std::string stopwords_source;
  Stopwords stopwords = resolve_stopwords(opts, stopwords_source);
  std::vector<Cluster> clusters = load_clusters(opts.clusters);
  fs::path outdir = opts.output_dir;
  fs::create_directories(outdir);

  std::vector<Row> rows;
  for (const BenchEntry& entry : kBenchMatrix) {
    Options entry_opts = opts;
    entry_opts.strategy = entry.strategy;
    entry_opts.distance = entry.metric;
    ModeSpec mode = parse_mode(entry.strategy);
    int entry_trials = entry.shuffle ? trials : 0;

    std::vector<std::vector<Row>> per_cluster(clusters.size());
    for_each_index(clusters.size(), opts.jobs, [&](std::size_t i) {
      per_cluster[i] = process_cluster(clusters[i], entry_opts, mode, stopwords, entry_trials,
                                       true, false, outdir);
    });
    for (const std::vector<Row>& batch : per_cluster) {
      if (entry.shuffle)
        rows.push_back(collapse_trials(batch, std::string(entry.strategy) + "+shuffle/mean"));
      else
        rows.insert(rows.end(), batch.begin(), batch.end());
    }
  }

  std::vector<MeanRow> means = compute_means(rows);
  std::string report = render_report(rows, means);
  std::string report_path = opts.report_path.empty()
                                ? (outdir / "report.tsv").generic_string()
                                : opts.report_path;
  write_text_file(report_path, report);
  std::cout << report << '\n';
  print_ordering_checks(means);
  if (!opts.compare.empty()) print_comparison(means, opts.compare);
  write_manifest(outdir, "bench", config_snapshot(opts, stopwords_source, true, trials),
                 opts.seed, clusters, rows, report_path);
  return 0;
}

CLI::Validator metric_validator() {
  return CLI::Validator(
      [](std::string& value) -> std::string {
        try {
          parse_metric(value);
        } catch (const std::exception& e) {
          return std::string(e.what());
        }
        return {};
      },
      "METRIC");
}

void add_common_options(CLI::App* cmd, Options& opts, bool with_strategy, bool with_report) {
  if (with_strategy) {
    cmd->add_option("--strategy", opts.strategy,
                    "Ranking mode: single-layer|waterfall|concat|mmr|centroid")
        ->capture_default_str()
        ->check(CLI::IsMember({"single-layer", "waterfall", "concat", "mmr", "centroid"}));
    cmd->add_option("--distance", opts.distance,
                    "Distance for the centrality strategies: "
                    "cosine|euclidean|manhattan|chebyshev|frac133|minkowski:<p>|js")
        ->capture_default_str()
        ->check(metric_validator());
    cmd->add_option("--mmr-lambda", opts.mmr_lambda,
                    "MMR relevance/diversity trade-off (1 = pure relevance)")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--mmr-sim1", opts.mmr_sim1, "MMR query-relevance metric")
        ->capture_default_str()
        ->check(metric_validator());
    cmd->add_option("--mmr-sim2", opts.mmr_sim2, "MMR redundancy metric")
        ->capture_default_str()
        ->check(metric_validator());
    cmd->add_option("--shuffle-trials", opts.shuffle_trials,
                    "Run N seeded random document orders instead of the chronological one")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  }
  cmd->add_option("--budget-words", opts.budget_words, "Summary budget in surface words")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--keyphrases", opts.keyphrases, "Key phrases kept after fusion (0 disables)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--stopwords", opts.stopwords_path,
                  "Stop-word file, one word per line (default: built-in English list)")
      ->envname("KPSUMM_STOPWORDS");
  cmd->add_flag("--no-query", opts.no_query,
                "Ignore query.txt for the centrality strategies");
  cmd->add_option("--seed", opts.seed, "Base seed for shuffle trials")->capture_default_str();
  cmd->add_option("--jobs", opts.jobs, "Clusters processed concurrently")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--output", opts.output_dir, "Directory for summaries and manifest.json")
      ->capture_default_str();
  if (with_report)
    cmd->add_option("--report", opts.report_path,
                    "TSV report path (default: <output>/report.tsv)");
  cmd->add_option("clusters", opts.clusters, "Cluster directories")->required();
  cmd->add_option("--config", opts.config_path,
                  "Key=value file supplying any flag; command-line wins");
}

// CLI11 only honors set_config on the root app, so subcommand config
// files are applied by hand after parsing: every key names a long
// option of the subcommand, values run through that option's own
// validators, and options already given on the command line win.
void apply_config_file(CLI::App* cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string entry = trim(line);
    if (entry.empty() || entry[0] == '#' || entry[0] == ';') continue;

    std::string key = entry;
    std::string value;
    if (auto eq = entry.find('='); eq != std::string::npos) {
      key = trim(entry.substr(0, eq));
      value = trim(entry.substr(eq + 1));
      if (value.size() >= 2 && ((value.front() == '"' && value.back() == '"') ||
                                (value.front() == '\'' && value.back() == '\'')))
        value = value.substr(1, value.size() - 2);
    }

    CLI::Option* op = cmd->get_option_no_throw("--" + key);
    if (op == nullptr) op = cmd->get_option_no_throw(key);
    if (op == nullptr)
      throw CLI::ConfigError(path + ":" + std::to_string(line_no) +
                             ": unknown config key '" + key + "'");
    if (op->count() > 0) continue;  // command line wins

    std::string result = value;
    if (op->get_expected_min() == 0) {  // flags accept bare keys
      if (result.empty()) result = "true";
      result = op->get_flag_value("--" + key, result);
    }
    op->add_result(result);
    op->run_callback();
  }
}

}  // namespace

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  CLI::App app{"Extractive multi-document summarizer built on support-set centrality"};
  app.set_version_flag("--version", std::string("kpsumm ") + kVersion);
  app.require_subcommand(1);

  Options opts;
  int bench_trials = 10;

  CLI::App* summarize =
      app.add_subcommand("summarize", "Write extractive summaries for cluster directories");
  add_common_options(summarize, opts, true, false);

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Summarize clusters and score them against refs/*.txt (TSV report)");
  add_common_options(evaluate, opts, true, true);

  CLI::App* bench = app.add_subcommand(
      "bench", "Run the strategy/metric benchmark matrix and report score orderings");
  add_common_options(bench, opts, false, true);
  bench->add_option("--shuffle-trials", bench_trials,
                    "Trials per shuffled configuration")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--compare", opts.compare,
                    "Print published reference scores side by side: duc2007|tac2009")
      ->check(CLI::IsMember({"duc2007", "tac2009"}));

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (!opts.config_path.empty())
      for (CLI::App* sub : app.get_subcommands()) apply_config_file(sub, opts.config_path);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "kpsumm: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  try {
    if (app.got_subcommand(summarize)) return cmd_summarize(opts);
    if (app.got_subcommand(evaluate)) return cmd_evaluate(opts);
    if (app.got_subcommand(bench)) return cmd_bench(opts, bench_trials);
  } catch (const std::exception& e) {
    std::cerr << "kpsumm: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(int argc, const char* const* argv) {
  return run(std::vector<std::string>(argv, argv + argc));
}

}  // namespace kpsumm::cli
