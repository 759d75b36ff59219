#include "rcmpp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcmpp/bench.hpp"
#include "rcmpp/matrix_market.hpp"

namespace rcmpp {

namespace {

struct StartOptions {
  std::string mode = "min-degree";
  std::uint64_t seed = 0;
  Index node = -1;
  bool seed_given = false;
  bool node_given = false;
};

void add_start_options(CLI::App* cmd, StartOptions& start) {
  cmd->add_option("--start", start.mode, "start node policy")
      ->check(CLI::IsMember({"min-degree", "random", "node"}));
  cmd->add_option_function<std::uint64_t>(
      "--seed", [&start](std::uint64_t s) { start.seed = s; start.seed_given = true; },
      "seed for --start random");
  cmd->add_option_function<Index>(
      "--node", [&start](Index k) { start.node = k; start.node_given = true; },
      "0-based start node for --start node");
}

StartPolicy make_policy(const StartOptions& start) {
  if (start.mode == "random") return StartPolicy::seeded_random(start.seed);
  if (start.mode == "node") {
    if (!start.node_given) throw std::invalid_argument("--start node requires --node");
    return StartPolicy::explicit_node(start.node);
  }
  return StartPolicy::min_degree();
}

void write_permutation(const Permutation& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << p.size() << '\n';
  for (auto v : p.new_of_old()) out << v << '\n';
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse symmetric matrix reordering: RCM++, GL_RCM and MIND_RCM"};
  app.require_subcommand(1);

  std::string algo = "rcm++";
  std::string in_path, out_path, perm_path, report_path;
  StartOptions start;
  auto* reorder = app.add_subcommand("reorder", "reorder one Matrix Market file");
  reorder->add_option("--algo", algo, "rcm++, gl, mind or none");
  reorder->add_option("--in", in_path, "input .mtx")->required();
  reorder->add_option("--out", out_path, "permuted matrix (.mtx)");
  reorder->add_option("--perm-out", perm_path, "permutation file");
  reorder->add_option("--report", report_path, "JSON reorder report");
  add_start_options(reorder, start);

  bench::BenchConfig config;
  std::vector<std::string> algos;
  std::string format = "csv";
  std::string dir, bench_out;
  auto add_bench_options = [&](CLI::App* cmd) {
    cmd->add_option("--dir", dir, "corpus directory of .mtx files")->required();
    cmd->add_option("--algo", algos, "algorithms to run (repeatable)");
    cmd->add_option("--span", config.smoothing_span, "exponential smoothing span");
    cmd->add_option("--repeats", config.finder_repeats, "finder timing repeats");
    cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out,--report", bench_out, "report path")->required();
    add_start_options(cmd, start);
  };
  auto* bench_cmd = app.add_subcommand("bench", "sweep a corpus and compare orderings");
  add_bench_options(bench_cmd);
  auto* solve_cmd = app.add_subcommand("solve-bench", "time envelope Cholesky solves per ordering");
  add_bench_options(solve_cmd);
  solve_cmd->add_option("--solve-repeats", config.solve_repeats, "timing repeats per solve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*reorder) {
      const auto algorithm = parse_algorithm(algo);
      const auto m = read_matrix_market(in_path);
      const auto result = rcm_pipeline(m, algorithm, make_policy(start));
      if (!out_path.empty())
        write_matrix_market(apply_permutation(m, result.permutation), std::filesystem::path(out_path));
      if (!perm_path.empty()) write_permutation(result.permutation, perm_path);
      const auto name = std::filesystem::path(in_path).stem().string();
      const auto json = bench::to_json(result.report, name);
      if (!report_path.empty()) {
        std::ofstream rep(report_path);
        if (!rep) throw std::runtime_error("cannot open " + report_path + " for writing");
        rep << json << '\n';
      } else {
        out << json << '\n';
      }
      return 0;
    }

    config.corpus_dir = dir;
    config.output_path = bench_out;
    config.output_format = format == "json" ? bench::OutputFormat::json : bench::OutputFormat::csv;
    config.start_policy = make_policy(start);
    if (!algos.empty()) {
      config.algorithms.clear();
      for (const auto& a : algos) config.algorithms.push_back(parse_algorithm(a));
    }
    config.solve = static_cast<bool>(*solve_cmd);
    config.validate();

    const auto corpus = bench::load_corpus(config.corpus_dir, &err);
    if (corpus.matrices.empty()) {
      err << "error: no parseable matrices in " << config.corpus_dir.string() << '\n';
      return 2;
    }
    if (config.solve) {
      const auto report = bench::run_solve_bench(corpus, config);
      bench::write_report(report, config);
      out << report.rows.size() << " solve rows, " << report.summary.skipped.size()
          << " skipped\n";
    } else {
      const auto report = bench::run_bench(corpus, config);
      bench::write_report(report, config);
      out << report.rows.size() << " rows, " << report.summary.skipped.size() << " skipped\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rcmpp
