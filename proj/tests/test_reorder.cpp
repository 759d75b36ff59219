#include <catch_amalgamated.hpp>

#include <filesystem>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rcmpp/matrix_market.hpp"
#include "rcmpp/reorder.hpp"

using namespace rcmpp;

namespace {

std::vector<Index> vec(std::span<const Index> s) { return {s.begin(), s.end()}; }

Permutation random_permutation(Index n, std::mt19937_64& rng) {
  std::vector<Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), Index{0});
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(std::move(p));
}

Permutation cm_single(const SparseSymMatrix<double>& m, Index start) {
  const auto g = build_graph(m);
  return cuthill_mckee(g, connected_components(g), std::vector<Index>{start});
}

const auto path5 = [] { return oracle::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}); };
const auto star5 = [] { return oracle::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); };

}  // namespace

TEST_CASE("reorder - permutation validation", "[reorder]") {
  CHECK_THROWS(Permutation({0, 0, 1}));
  CHECK_THROWS(Permutation({0, 3, 1}));
  CHECK_THROWS(Permutation::from_order(std::vector<Index>{1, 1}));
  const Permutation p({2, 0, 1});
  CHECK(p.old_of_new() == std::vector<Index>{1, 2, 0});
  CHECK(Permutation::from_order(p.old_of_new()) == p);
  CHECK(p.inverse().inverse() == p);
}

TEST_CASE("reorder - cuthill-mckee on small graphs", "[reorder]") {
  CHECK(cm_single(path5(), 0) == Permutation::identity(5));
  CHECK(vec(cm_single(path5(), 4).new_of_old()) == std::vector<Index>{4, 3, 2, 1, 0});
  CHECK(cm_single(star5(), 1).old_of_new() == std::vector<Index>{1, 0, 2, 3, 4});
}

TEST_CASE("reorder - neighbors are numbered by degree then id", "[reorder]") {
  // 0 has neighbors 1 (deg 3), 2 (deg 1), 3 (deg 2).
  const auto m = oracle::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {3, 4}});
  CHECK(cm_single(m, 0).old_of_new() == std::vector<Index>{0, 2, 3, 1, 4, 5});
}

TEST_CASE("reorder - cuthill-mckee start node errors", "[reorder]") {
  const auto g = build_graph(oracle::from_edges(4, {{0, 1}, {2, 3}}));
  const auto c = connected_components(g);
  CHECK_THROWS_AS(cuthill_mckee(g, c, std::vector<Index>{0}), std::invalid_argument);
  CHECK_THROWS_AS(cuthill_mckee(g, c, std::vector<Index>{2, 0}), std::invalid_argument);
  CHECK_NOTHROW(cuthill_mckee(g, c, std::vector<Index>{1, 3}));
}

TEST_CASE("reorder - reverse", "[reorder]") {
  CHECK(vec(reverse(Permutation::identity(3)).new_of_old()) == std::vector<Index>{2, 1, 0});
  const auto cm = cm_single(star5(), 1);
  const auto r = reverse(cm);
  for (Index v = 0; v < 5; ++v) CHECK(r[v] == 4 - cm[v]);
  CHECK(r.old_of_new() == std::vector<Index>{4, 3, 2, 0, 1});

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_permutation(1 + static_cast<Index>(rng() % 100), rng);
    CHECK(reverse(reverse(p)) == p);
  }
}

TEST_CASE("reorder - apply_permutation", "[reorder]") {
  const auto tri = oracle::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(apply_permutation(tri, Permutation::identity(4)) == tri);

  const auto flipped = apply_permutation(tri, reverse(Permutation::identity(4)));
  CHECK(bandwidth(flipped) == 1);
  CHECK(oracle::bandwidth(oracle::coordinates(flipped)) == 1);

  const auto arrow = star5();
  const Permutation to_last({4, 0, 1, 2, 3});
  const auto moved = apply_permutation(arrow, to_last);
  const auto coords = oracle::permute(oracle::coordinates(arrow), to_last.new_of_old());
  CHECK(bandwidth(moved) == 4);
  CHECK(profile(arrow) == 10);
  CHECK(profile(moved) == oracle::profile(5, coords));
  CHECK(profile(moved) == 4);  // only the center row, now last, reaches column 0

  CHECK_THROWS_AS(apply_permutation(tri, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("reorder - apply_permutation matches Eigen's symmetric permutation",
          "[reorder][property]") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 80);
    const auto pattern = oracle::random_graph(n, 1.2, false, rng);
    std::vector<Entry<double>> entries;
    for (Index i = 0; i < n; ++i)
      for (auto j : pattern.row(i))
        if (j <= i) {
          const double v = u(rng);
          entries.push_back({i, j, v});
          if (i != j) entries.push_back({j, i, v});
        }
    const auto m = SparseSymMatrix<double>::from_entries(n, entries, true);
    const auto p = random_permutation(n, rng);

    Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, Index> ep(n);
    for (Index v = 0; v < n; ++v) ep.indices()[v] = p[v];
    const Eigen::MatrixXd expected = ep * Eigen::MatrixXd(to_eigen(m)) * ep.transpose();
    const auto permuted = apply_permutation(m, p);
    CHECK(Eigen::MatrixXd(to_eigen(permuted)) == expected);
    CHECK(permuted.nnz() == m.nnz());
  }
}

TEST_CASE("reorder - algorithm names", "[reorder]") {
  CHECK(parse_algorithm("rcm++") == Algorithm::rcm_pp);
  CHECK(parse_algorithm("RCM++") == Algorithm::rcm_pp);
  CHECK(parse_algorithm("gl") == Algorithm::gl_rcm);
  CHECK(parse_algorithm("MIND_RCM") == Algorithm::mind_rcm);
  CHECK(parse_algorithm("none") == Algorithm::none);
  CHECK_THROWS_AS(parse_algorithm("sloan"), std::invalid_argument);
  for (auto a : {Algorithm::rcm_pp, Algorithm::gl_rcm, Algorithm::mind_rcm, Algorithm::none})
    CHECK(parse_algorithm(to_string(a)) == a);
}

TEST_CASE("reorder - pipeline on trivial inputs", "[reorder]") {
  const auto id5 = oracle::from_edges(5, {});
  for (auto a : {Algorithm::rcm_pp, Algorithm::gl_rcm, Algorithm::mind_rcm, Algorithm::none}) {
    const auto r = rcm_pipeline(id5, a);
    CHECK(r.report.bandwidth_before == 0);
    CHECK(r.report.bandwidth_after == 0);
    CHECK(r.report.profile_before == 0);
    CHECK(r.report.profile_after == 0);
    CHECK(r.report.algorithm == a);
    CHECK(r.report.start_nodes.size() == (a == Algorithm::none ? 0u : 5u));
  }
  const auto none = rcm_pipeline(path5(), Algorithm::none);
  CHECK(none.permutation == Permutation::identity(5));
}

TEST_CASE("reorder - scrambled path reaches bandwidth one", "[reorder]") {
  const auto m = read_matrix_market(std::string(RCMPP_TEST_DATA_DIR) + "/path5_scrambled.mtx");
  const auto r = rcm_pipeline(m, Algorithm::rcm_pp);
  CHECK(r.report.bandwidth_before == 3);
  CHECK(r.report.bandwidth_after == 1);
  // A path admits bandwidth 1 and nothing lower once it has an edge.
  const auto ex = oracle::rcm_from_every_node(m);
  CHECK(ex.best_bandwidth == 1);
}

TEST_CASE("reorder - divergence fixture end to end", "[reorder]") {
  const auto m = read_matrix_market(std::string(RCMPP_TEST_DATA_DIR) + "/divergence.mtx");
  const auto pp = rcm_pipeline(m, Algorithm::rcm_pp).report;
  const auto gl = rcm_pipeline(m, Algorithm::gl_rcm).report;
  CHECK(pp.start_nodes != gl.start_nodes);
  CHECK(pp.bandwidth_after < gl.bandwidth_after);
  CHECK(pp.profile_after < gl.profile_after);
}

TEST_CASE("reorder - pipeline invariants on random and corpus matrices", "[reorder][property]") {
  std::vector<SparseSymMatrix<double>> inputs;
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial)
    inputs.push_back(oracle::random_graph(1 + static_cast<Index>(rng() % 250),
                                          static_cast<double>(rng() % 20) / 10.0, trial % 2 == 0,
                                          rng));
  for (const auto& entry : std::filesystem::directory_iterator(RCMPP_CORPUS_DIR))
    inputs.push_back(read_matrix_market(entry.path()));

  for (const auto& m : inputs) {
    for (auto a : {Algorithm::rcm_pp, Algorithm::gl_rcm, Algorithm::mind_rcm}) {
      const auto r = rcm_pipeline(m, a, StartPolicy::seeded_random(17));
      auto sorted = vec(r.permutation.new_of_old());
      std::sort(sorted.begin(), sorted.end());
      std::vector<Index> expect(sorted.size());
      std::iota(expect.begin(), expect.end(), Index{0});
      CHECK(sorted == expect);

      const auto permuted = apply_permutation(m, r.permutation);
      CHECK(permuted.nnz() == m.nnz());
      const auto coords = oracle::permute(oracle::coordinates(m), r.permutation.new_of_old());
      CHECK(r.report.bandwidth_after == oracle::bandwidth(coords));
      CHECK(r.report.profile_after == oracle::profile(m.rows(), coords));
      CHECK(r.report.bandwidth_after == bandwidth(m, r.permutation));
      CHECK(r.report.profile_after == profile(m, r.permutation));

      // Reversal never changes bandwidth.
      const auto g = build_graph(m);
      const auto comps = connected_components(g);
      const auto cm = cuthill_mckee(g, comps, r.report.start_nodes);
      CHECK(bandwidth(m, cm) == r.report.bandwidth_after);
    }
  }
}

TEST_CASE("reorder - component order does not change within-component numbering",
          "[reorder][property]") {
  const auto a = oracle::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  const auto b = oracle::from_edges(3, {{0, 1}, {1, 2}});
  // a on 0..3 then b on 4..6, versus b on 0..2 then a on 3..6.
  std::vector<std::pair<Index, Index>> first, second;
  for (Index i = 0; i < 4; ++i)
    for (auto j : a.row(i))
      if (j > i) {
        first.emplace_back(i, j);
        second.emplace_back(i + 3, j + 3);
      }
  for (Index i = 0; i < 3; ++i)
    for (auto j : b.row(i))
      if (j > i) {
        first.emplace_back(i + 4, j + 4);
        second.emplace_back(i, j);
      }
  const auto r1 = rcm_pipeline(oracle::from_edges(7, first), Algorithm::rcm_pp).permutation;
  const auto r2 = rcm_pipeline(oracle::from_edges(7, second), Algorithm::rcm_pp).permutation;
  // Relative order inside component a, and inside b, must agree.
  for (Index u = 0; u < 4; ++u)
    for (Index v = 0; v < 4; ++v)
      CHECK((r1[u] < r1[v]) == (r2[u + 3] < r2[v + 3]));
  for (Index u = 0; u < 3; ++u)
    for (Index v = 0; v < 3; ++v)
      CHECK((r1[u + 4] < r1[v + 4]) == (r2[u] < r2[v]));
}

TEST_CASE("reorder - reversal helps profile somewhere in the corpus", "[reorder]") {
  Index differs = 0, better = 0;
  for (const auto& entry : std::filesystem::directory_iterator(RCMPP_CORPUS_DIR)) {
    const auto m = read_matrix_market(entry.path());
    const auto g = build_graph(m);
    const auto comps = connected_components(g);
    BfsWorkspace ws(g.size());
    const auto starts = find_start_nodes(g, comps, Algorithm::rcm_pp, StartPolicy::min_degree(), ws);
    const auto cm = cuthill_mckee(g, comps, starts);
    const auto rcm = reverse(cm);
    CHECK(bandwidth(m, cm) == bandwidth(m, rcm));
    if (profile(m, cm) != profile(m, rcm)) ++differs;
    if (profile(m, rcm) < profile(m, cm)) ++better;
  }
  CHECK(differs > 0);
  CHECK(better > 0);
}
