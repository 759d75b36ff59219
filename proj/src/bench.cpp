#include "rcmpp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rcmpp/envelope_cholesky.hpp"
#include "rcmpp/matrix_market.hpp"

namespace rcmpp::bench {

namespace {

using clock = std::chrono::steady_clock;
using ordered_json = nlohmann::ordered_json;

std::int64_t elapsed_ns(clock::time_point a, clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count();
}

std::int64_t median(std::vector<std::int64_t> v) {
  if (v.empty()) return 0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>((v.size() - 1) / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  out << x;
  return out.str();
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::string join_nodes(const std::vector<Index>& nodes) {
  std::string out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) out += ';';
    out += std::to_string(nodes[k]);
  }
  return out;
}

std::vector<Index> split_nodes(const std::string& s) {
  std::vector<Index> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ';'))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

// Relative difference of each algorithm against the MIND_RCM baseline,
// smoothed along the size-ordered matrix index.
void append_series(std::vector<SeriesRow>& out, const std::string& metric,
                   const std::vector<std::string>& matrix_names,
                   const std::vector<std::map<Algorithm, double>>& values, Index span) {
  if (values.empty() || !values.front().contains(Algorithm::mind_rcm)) return;
  for (const auto& [algorithm, unused] : values.front()) {
    if (algorithm == Algorithm::mind_rcm) continue;
    std::vector<SeriesRow> rows;
    std::vector<SeriesPoint> present;
    for (std::size_t k = 0; k < values.size(); ++k) {
      SeriesRow row{metric, std::string(to_string(algorithm)), static_cast<Index>(k),
                    matrix_names[k], {}, {}};
      row.raw = relative_difference(values[k].at(Algorithm::mind_rcm), values[k].at(algorithm));
      if (row.raw) present.push_back({row.index, *row.raw});
      rows.push_back(std::move(row));
    }
    if (!present.empty()) {
      const auto smoothed = exponential_smoothing(present, span);
      std::size_t s = 0;
      for (auto& row : rows)
        if (row.raw) row.smoothed = smoothed[s++].value;
    }
    out.insert(out.end(), rows.begin(), rows.end());
  }
}

std::map<std::string, double> optimal_among(const std::vector<std::map<Algorithm, double>>& values) {
  std::vector<AlgorithmValues> named;
  for (const auto& per_matrix : values) {
    AlgorithmValues row;
    for (const auto& [algorithm, v] : per_matrix)
      if (algorithm != Algorithm::none) row[std::string(to_string(algorithm))] = v;
    if (!row.empty()) named.push_back(std::move(row));
  }
  return proportion_optimal(named);
}

ordered_json summary_json(const Summary& summary) {
  ordered_json j;
  j["proportion_optimal"] = ordered_json::object();
  for (const auto& [metric, by_algorithm] : summary.proportion_optimal) {
    ordered_json m = ordered_json::object();
    for (const auto& [name, value] : by_algorithm) m[name] = value;
    j["proportion_optimal"][metric] = m;
  }
  j["proportion_optimal_ties"] = "all tied algorithms are credited";
  j["series"] = ordered_json::array();
  for (const auto& s : summary.series) {
    ordered_json r;
    r["metric"] = s.metric;
    r["algorithm"] = s.algorithm;
    r["index"] = s.index;
    r["matrix"] = s.matrix;
    r["raw"] = s.raw ? ordered_json(*s.raw) : ordered_json(nullptr);
    r["smoothed"] = s.smoothed ? ordered_json(*s.smoothed) : ordered_json(nullptr);
    j["series"].push_back(r);
  }
  j["skipped"] = ordered_json::array();
  for (const auto& s : summary.skipped) j["skipped"].push_back({{"matrix", s.name}, {"reason", s.reason}});
  return j;
}

template <typename Report>
void write_any(const Report& report, const BenchConfig& config) {
  if (config.output_path.empty()) throw std::invalid_argument("no output path given");
  if (config.output_format == OutputFormat::json) {
    std::ofstream out(config.output_path);
    if (!out) throw std::runtime_error("cannot open " + config.output_path.string());
    out << to_json(report) << '\n';
    if (!out) throw std::runtime_error("failed writing " + config.output_path.string());
    return;
  }
  std::ofstream rows(config.output_path);
  if (!rows) throw std::runtime_error("cannot open " + config.output_path.string());
  write_rows_csv(report.rows, rows);
  const auto sp = summary_path(config.output_path);
  std::ofstream summary(sp);
  if (!summary) throw std::runtime_error("cannot open " + sp.string());
  write_summary_csv(report.summary, summary);
  if (!rows || !summary) throw std::runtime_error("failed writing CSV report");
}

}  // namespace

void BenchConfig::validate() const {
  if (finder_repeats < 1) throw std::invalid_argument("finder_repeats must be at least 1");
  if (solve_repeats < 1) throw std::invalid_argument("solve_repeats must be at least 1");
  if (smoothing_span < 1) throw std::invalid_argument("smoothing span must be at least 1");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
}

void sort_by_size(std::vector<CorpusMatrix>& matrices) {
  std::sort(matrices.begin(), matrices.end(), [](const auto& a, const auto& b) {
    if (a.matrix.rows() != b.matrix.rows()) return a.matrix.rows() < b.matrix.rows();
    if (a.matrix.nnz() != b.matrix.nnz()) return a.matrix.nnz() < b.matrix.nnz();
    return a.name < b.name;
  });
}

Corpus load_corpus(const std::filesystem::path& dir, std::ostream* log) {
  if (!std::filesystem::is_directory(dir))
    throw std::runtime_error("corpus directory " + dir.string() + " does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".mtx") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  Corpus corpus;
  for (const auto& path : files) {
    const auto name = path.stem().string();
    try {
      corpus.matrices.push_back({name, read_matrix_market(path)});
    } catch (const std::exception& e) {
      corpus.skipped.push_back({name, e.what()});
      if (log) *log << "warning: skipping " << path.string() << ": " << e.what() << '\n';
    }
  }
  sort_by_size(corpus.matrices);
  return corpus;
}

std::int64_t median_finder_time_ns(const AdjacencyGraph& g, const ComponentSet& components,
                                   Algorithm algorithm, const StartPolicy& policy,
                                   Index repeats) {
  if (algorithm == Algorithm::none) return 0;
  BfsWorkspace ws(g.size());
  std::vector<std::int64_t> times;
  times.reserve(static_cast<std::size_t>(repeats));
  for (Index r = 0; r < repeats; ++r) {
    const auto t0 = clock::now();
    const auto starts = find_start_nodes(g, components, algorithm, policy, ws);
    const auto t1 = clock::now();
    if (starts.size() != components.components.size()) throw std::logic_error("finder lost a component");
    times.push_back(elapsed_ns(t0, t1));
  }
  return median(std::move(times));
}

BenchReport run_bench(const Corpus& corpus, const BenchConfig& config) {
  config.validate();
  if (corpus.matrices.empty()) throw std::runtime_error("corpus has no parseable matrices");

  BenchReport report;
  std::vector<std::string> names;
  std::vector<std::map<Algorithm, double>> bw_values, profile_values;
  for (const auto& [name, m] : corpus.matrices) {
    const auto g = build_graph(m);
    const auto components = connected_components(g);
    const auto bw_before = bandwidth(m);
    const auto profile_before = profile(m);
    std::map<Algorithm, double> bw, pr;
    for (const auto algorithm : config.algorithms) {
      auto ordering = rcm_ordering(g, components, algorithm, config.start_policy);
      const auto permuted = apply_permutation(m, ordering.permutation);
      BenchRow row;
      row.matrix = name;
      row.n = m.rows();
      row.nnz = m.nnz();
      row.algorithm = algorithm;
      row.start_nodes = std::move(ordering.start_nodes);
      row.bandwidth_before = bw_before;
      row.profile_before = profile_before;
      row.bandwidth_after = bandwidth(permuted);
      row.profile_after = profile(permuted);
      row.finder_time_ns =
          median_finder_time_ns(g, components, algorithm, config.start_policy, config.finder_repeats);
      row.ordering_time_ns = ordering.ordering_time.count();
      bw[algorithm] = static_cast<double>(row.bandwidth_after);
      pr[algorithm] = static_cast<double>(row.profile_after);
      report.rows.push_back(std::move(row));
    }
    names.push_back(name);
    bw_values.push_back(std::move(bw));
    profile_values.push_back(std::move(pr));
  }

  report.summary.proportion_optimal["bandwidth"] = optimal_among(bw_values);
  report.summary.proportion_optimal["profile"] = optimal_among(profile_values);
  append_series(report.summary.series, "bandwidth", names, bw_values, config.smoothing_span);
  append_series(report.summary.series, "profile", names, profile_values, config.smoothing_span);
  report.summary.skipped = corpus.skipped;
  return report;
}

SolveReport run_solve_bench(const Corpus& corpus, const BenchConfig& config) {
  config.validate();
  if (corpus.matrices.empty()) throw std::runtime_error("corpus has no parseable matrices");

  auto algorithms = config.algorithms;
  if (std::find(algorithms.begin(), algorithms.end(), Algorithm::none) == algorithms.end())
    algorithms.push_back(Algorithm::none);

  SolveReport report;
  report.summary.skipped = corpus.skipped;
  std::vector<std::string> names;
  std::vector<std::map<Algorithm, double>> times;
  for (const auto& [name, m] : corpus.matrices) {
    if (!m.has_values()) {
      report.summary.skipped.push_back({name, "pattern matrix has no values"});
      continue;
    }
    const auto g = build_graph(m);
    const auto components = connected_components(g);
    std::vector<SolveRow> rows;
    std::optional<std::string> failure;
    for (const auto algorithm : algorithms) {
      const auto ordering = rcm_ordering(g, components, algorithm, config.start_policy);
      const auto a = apply_permutation(m, ordering.permutation);
      const Vector<double> b = multiply(a, Vector<double>::Ones(a.rows()).eval());

      std::vector<std::int64_t> factor_times, solve_times;
      EnvelopeFactor<double> factor;
      Vector<double> x;
      try {
        for (Index r = 0; r < config.solve_repeats; ++r) {
          const auto t0 = clock::now();
          factor = envelope_cholesky(a);
          const auto t1 = clock::now();
          x = solve(factor, b);
          const auto t2 = clock::now();
          factor_times.push_back(elapsed_ns(t0, t1));
          solve_times.push_back(elapsed_ns(t1, t2));
        }
      } catch (const NotPositiveDefinite& e) {
        failure = std::string("not positive definite: ") + e.what();
        break;
      }
      SolveRow row;
      row.matrix = name;
      row.n = a.rows();
      row.nnz = a.nnz();
      row.algorithm = algorithm;
      row.profile_after = profile(a);
      row.factor_entries = factor.entry_count();
      row.factor_time_ns = median(std::move(factor_times));
      row.solve_time_ns = median(std::move(solve_times));
      const double bnorm = b.norm();
      row.residual = (multiply(a, x) - b).norm() / (bnorm > 0 ? bnorm : 1.0);
      rows.push_back(std::move(row));
    }
    if (failure) {
      report.summary.skipped.push_back({name, *failure});
      continue;
    }
    std::map<Algorithm, double> t;
    for (const auto& row : rows) t[row.algorithm] = static_cast<double>(row.total_time_ns());
    names.push_back(name);
    times.push_back(std::move(t));
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  append_series(report.summary.series, "total_solve_time", names, times, config.smoothing_span);
  return report;
}

void write_rows_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "matrix,n,nnz,algorithm,start_nodes,bandwidth_before,bandwidth_after,profile_before,"
         "profile_after,finder_time_ns,ordering_time_ns\n";
  for (const auto& r : rows) {
    out << csv_field(r.matrix) << ',' << r.n << ',' << r.nnz << ',' << to_string(r.algorithm)
        << ',' << join_nodes(r.start_nodes) << ',' << r.bandwidth_before << ','
        << r.bandwidth_after << ',' << r.profile_before << ',' << r.profile_after << ','
        << r.finder_time_ns << ',' << r.ordering_time_ns << '\n';
  }
}

void write_rows_csv(const std::vector<SolveRow>& rows, std::ostream& out) {
  out << "matrix,n,nnz,algorithm,profile_after,factor_entries,factor_time_ns,solve_time_ns,"
         "total_time_ns,residual\n";
  for (const auto& r : rows) {
    out << csv_field(r.matrix) << ',' << r.n << ',' << r.nnz << ',' << to_string(r.algorithm)
        << ',' << r.profile_after << ',' << r.factor_entries << ',' << r.factor_time_ns << ','
        << r.solve_time_ns << ',' << r.total_time_ns() << ',' << format_double(r.residual)
        << '\n';
  }
}

void write_summary_csv(const Summary& summary, std::ostream& out) {
  out << "kind,metric,algorithm,index,matrix,raw,smoothed,note\n";
  for (const auto& [metric, by_algorithm] : summary.proportion_optimal)
    for (const auto& [name, value] : by_algorithm)
      out << "proportion_optimal," << metric << ',' << csv_field(name) << ",,,"
          << format_double(value) << ",,ties credit all tied algorithms\n";
  for (const auto& s : summary.series)
    out << "relative_difference," << s.metric << ',' << s.algorithm << ',' << s.index << ','
        << csv_field(s.matrix) << ',' << format_optional(s.raw) << ','
        << format_optional(s.smoothed) << ",vs MIND_RCM\n";
  for (const auto& s : summary.skipped)
    out << "skipped,,,," << csv_field(s.name) << ",,," << csv_field(s.reason) << '\n';
}

std::vector<BenchRow> read_bench_rows_csv(std::istream& in) {
  std::vector<BenchRow> rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 11) throw std::runtime_error("bench CSV row has " + std::to_string(f.size()) + " fields");
    BenchRow r;
    r.matrix = f[0];
    r.n = std::stoll(f[1]);
    r.nnz = std::stoll(f[2]);
    r.algorithm = parse_algorithm(f[3]);
    r.start_nodes = split_nodes(f[4]);
    r.bandwidth_before = std::stoll(f[5]);
    r.bandwidth_after = std::stoll(f[6]);
    r.profile_before = std::stoll(f[7]);
    r.profile_after = std::stoll(f[8]);
    r.finder_time_ns = std::stoll(f[9]);
    r.ordering_time_ns = std::stoll(f[10]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SolveRow> read_solve_rows_csv(std::istream& in) {
  std::vector<SolveRow> rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 10) throw std::runtime_error("solve CSV row has " + std::to_string(f.size()) + " fields");
    SolveRow r;
    r.matrix = f[0];
    r.n = std::stoll(f[1]);
    r.nnz = std::stoll(f[2]);
    r.algorithm = parse_algorithm(f[3]);
    r.profile_after = std::stoll(f[4]);
    r.factor_entries = std::stoll(f[5]);
    r.factor_time_ns = std::stoll(f[6]);
    r.solve_time_ns = std::stoll(f[7]);
    r.residual = std::stod(f[9]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string to_json(const BenchReport& report) {
  ordered_json j;
  j["rows"] = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json o;
    o["matrix"] = r.matrix;
    o["n"] = r.n;
    o["nnz"] = r.nnz;
    o["algorithm"] = to_string(r.algorithm);
    o["start_nodes"] = r.start_nodes;
    o["bandwidth_before"] = r.bandwidth_before;
    o["bandwidth_after"] = r.bandwidth_after;
    o["profile_before"] = r.profile_before;
    o["profile_after"] = r.profile_after;
    o["finder_time_ns"] = r.finder_time_ns;
    o["ordering_time_ns"] = r.ordering_time_ns;
    j["rows"].push_back(o);
  }
  j["summary"] = summary_json(report.summary);
  return j.dump(2);
}

std::string to_json(const SolveReport& report) {
  ordered_json j;
  j["rows"] = ordered_json::array();
  for (const auto& r : report.rows) {
    ordered_json o;
    o["matrix"] = r.matrix;
    o["n"] = r.n;
    o["nnz"] = r.nnz;
    o["algorithm"] = to_string(r.algorithm);
    o["profile_after"] = r.profile_after;
    o["factor_entries"] = r.factor_entries;
    o["factor_time_ns"] = r.factor_time_ns;
    o["solve_time_ns"] = r.solve_time_ns;
    o["total_time_ns"] = r.total_time_ns();
    o["residual"] = r.residual;
    j["rows"].push_back(o);
  }
  j["summary"] = summary_json(report.summary);
  return j.dump(2);
}

std::string to_json(const ReorderReport& report, const std::string& matrix_name) {
  ordered_json o;
  o["matrix"] = matrix_name;
  o["algorithm"] = to_string(report.algorithm);
  o["start_nodes"] = report.start_nodes;
  o["bandwidth_before"] = report.bandwidth_before;
  o["bandwidth_after"] = report.bandwidth_after;
  o["profile_before"] = report.profile_before;
  o["profile_after"] = report.profile_after;
  o["finder_time_ns"] = report.finder_time.count();
  o["ordering_time_ns"] = report.ordering_time.count();
  return o.dump(2);
}

std::filesystem::path summary_path(const std::filesystem::path& output_path) {
  auto p = output_path;
  p.replace_extension();
  p += ".summary.csv";
  return p;
}

void write_report(const BenchReport& report, const BenchConfig& config) { write_any(report, config); }
void write_report(const SolveReport& report, const BenchConfig& config) { write_any(report, config); }

}  // namespace rcmpp::bench
