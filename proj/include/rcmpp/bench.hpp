#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcmpp/metrics.hpp"
#include "rcmpp/node_finders.hpp"
#include "rcmpp/reorder.hpp"
#include "rcmpp/sparse_sym_matrix.hpp"

namespace rcmpp::bench {

enum class OutputFormat { csv, json };

struct BenchConfig {
  std::filesystem::path corpus_dir;
  std::vector<Algorithm> algorithms{Algorithm::rcm_pp, Algorithm::gl_rcm, Algorithm::mind_rcm};
  StartPolicy start_policy = StartPolicy::min_degree();
  Index smoothing_span = 100;
  Index finder_repeats = 100;
  Index solve_repeats = 5;
  bool solve = false;
  OutputFormat output_format = OutputFormat::csv;
  std::filesystem::path output_path;

  /// Throws std::invalid_argument on out-of-range knobs.
  void validate() const;
};

struct CorpusMatrix {
  std::string name;
  SparseSymMatrix<double> matrix;
};

struct SkippedMatrix {
  std::string name;
  std::string reason;
};

/// Parseable matrices in size order (n, then nnz, then name) plus the files
/// that failed to load.
struct Corpus {
  std::vector<CorpusMatrix> matrices;
  std::vector<SkippedMatrix> skipped;
};

/// Loads every *.mtx file in `dir`. Failures are recorded, and logged to
/// `log` when given, but never abort the load.
Corpus load_corpus(const std::filesystem::path& dir, std::ostream* log = nullptr);

void sort_by_size(std::vector<CorpusMatrix>& matrices);

struct BenchRow {
  std::string matrix;
  Index n = 0;
  Index nnz = 0;
  Algorithm algorithm = Algorithm::none;
  std::vector<Index> start_nodes;
  Index bandwidth_before = 0;
  Index bandwidth_after = 0;
  Index profile_before = 0;
  Index profile_after = 0;
  std::int64_t finder_time_ns = 0;
  std::int64_t ordering_time_ns = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct SolveRow {
  std::string matrix;
  Index n = 0;
  Index nnz = 0;
  Algorithm algorithm = Algorithm::none;
  Index profile_after = 0;
  Index factor_entries = 0;
  std::int64_t factor_time_ns = 0;
  std::int64_t solve_time_ns = 0;
  double residual = 0.0;

  std::int64_t total_time_ns() const { return factor_time_ns + solve_time_ns; }
  friend bool operator==(const SolveRow&, const SolveRow&) = default;
};

/// One point of a relative-difference-vs-MIND_RCM series. `raw` is empty
/// when the baseline value is zero; such points are left out of smoothing.
struct SeriesRow {
  std::string metric;
  std::string algorithm;
  Index index = 0;
  std::string matrix;
  std::optional<double> raw;
  std::optional<double> smoothed;

  friend bool operator==(const SeriesRow&, const SeriesRow&) = default;
};

struct Summary {
  /// metric ("bandwidth", "profile") -> algorithm -> fraction optimal.
  std::map<std::string, std::map<std::string, double>> proportion_optimal;
  std::vector<SeriesRow> series;
  std::vector<SkippedMatrix> skipped;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  Summary summary;
};

struct SolveReport {
  std::vector<SolveRow> rows;
  Summary summary;
};

/// Median of `repeats` timings of the finder stage alone.
std::int64_t median_finder_time_ns(const AdjacencyGraph& g, const ComponentSet& components,
                                   Algorithm algorithm, const StartPolicy& policy,
                                   Index repeats);

BenchReport run_bench(const Corpus& corpus, const BenchConfig& config);

/// Factorizes every matrix with values under each configured algorithm and
/// under no reordering. Matrices without values, or that fail to factorize,
/// are reported as skipped.
SolveReport run_solve_bench(const Corpus& corpus, const BenchConfig& config);

// CSV: header row, comma separated, LF line endings. The summary goes to a
// separate table with columns kind,metric,algorithm,index,matrix,raw,smoothed.
void write_rows_csv(const std::vector<BenchRow>& rows, std::ostream& out);
void write_rows_csv(const std::vector<SolveRow>& rows, std::ostream& out);
void write_summary_csv(const Summary& summary, std::ostream& out);
std::vector<BenchRow> read_bench_rows_csv(std::istream& in);
std::vector<SolveRow> read_solve_rows_csv(std::istream& in);

std::string to_json(const BenchReport& report);
std::string to_json(const SolveReport& report);
std::string to_json(const ReorderReport& report, const std::string& matrix_name);

/// Writes the report in the configured format. CSV output puts rows at
/// `output_path` and the summary next to it as `<stem>.summary.csv`.
void write_report(const BenchReport& report, const BenchConfig& config);
void write_report(const SolveReport& report, const BenchConfig& config);

std::filesystem::path summary_path(const std::filesystem::path& output_path);

}  // namespace rcmpp::bench
