#include <catch_amalgamated.hpp>

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "rcmpp/graph.hpp"
#include "rcmpp/matrix_market.hpp"

using namespace rcmpp;

namespace {

std::vector<Index> vec(std::span<const Index> s) { return {s.begin(), s.end()}; }

std::vector<std::vector<Index>> levels_of(const LevelStructure& ls) {
  std::vector<std::vector<Index>> out;
  for (Index i = 0; i < ls.num_levels(); ++i) out.push_back(vec(ls.level(i)));
  return out;
}

auto path5() { return oracle::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }
auto star5() { return oracle::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }

}  // namespace

TEST_CASE("graph - diagonal entries never become edges", "[graph]") {
  const auto g = build_graph(oracle::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(g.size() == 3);
  CHECK(vec(g.neighbors(1)) == std::vector<Index>{0, 2});
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
}

TEST_CASE("graph - identity matrix gives isolated nodes", "[graph]") {
  const auto g = build_graph(oracle::from_edges(4, {}));
  for (Index v = 0; v < 4; ++v) CHECK(g.degree(v) == 0);
  const auto ls = bfs_level_structure(g, 2);
  CHECK(ls.depth() == 0);
  CHECK(ls.width() == 1);
}

TEST_CASE("graph - arrow matrix is a star", "[graph]") {
  const auto g = build_graph(star5());
  std::vector<Index> degrees;
  for (Index v = 0; v < 5; ++v) degrees.push_back(g.degree(v));
  CHECK(degrees == std::vector<Index>{4, 1, 1, 1, 1});
}

TEST_CASE("graph - level structures of small graphs", "[graph]") {
  const auto p = build_graph(path5());
  auto ls = bfs_level_structure(p, 0);
  CHECK(levels_of(ls) == std::vector<std::vector<Index>>{{0}, {1}, {2}, {3}, {4}});
  CHECK(ls.depth() == 4);
  CHECK(ls.width() == 1);

  ls = bfs_level_structure(p, 2);
  CHECK(levels_of(ls) == std::vector<std::vector<Index>>{{2}, {1, 3}, {0, 4}});
  CHECK(ls.depth() == 2);
  CHECK(ls.width() == 2);

  ls = bfs_level_structure(build_graph(star5()), 1);
  CHECK(levels_of(ls) == std::vector<std::vector<Index>>{{1}, {0}, {2, 3, 4}});
  CHECK(ls.depth() == 2);
  CHECK(ls.width() == 3);

  CHECK_THROWS_AS(bfs_level_structure(p, 5), std::out_of_range);
  CHECK_THROWS_AS(bfs_level_structure(p, -1), std::out_of_range);
}

TEST_CASE("graph - connected components", "[graph]") {
  auto c = connected_components(build_graph(oracle::from_edges(3, {})));
  CHECK(c.components == std::vector<std::vector<Index>>{{0}, {1}, {2}});

  c = connected_components(build_graph(path5()));
  CHECK(c.size() == 1);

  c = connected_components(
      build_graph(oracle::from_edges(6, {{3, 5}, {0, 1}, {4, 3}, {1, 2}, {2, 0}, {4, 5}})));
  CHECK(c.components == std::vector<std::vector<Index>>{{0, 1, 2}, {3, 4, 5}});
  CHECK(c.component_of == std::vector<Index>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("graph - levels equal BFS distances on random graphs", "[graph][property]") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + static_cast<Index>(rng() % 499);
    const auto m = oracle::random_graph(n, 0.3 + static_cast<double>(rng() % 30) / 10.0,
                                        trial % 3 != 0, rng);
    const auto g = build_graph(m);
    const auto adj = oracle::adjacency_lists(m);
    BfsWorkspace ws(g.size());
    for (int r = 0; r < 3; ++r) {
      const Index root = static_cast<Index>(rng() % static_cast<std::uint64_t>(n));
      const auto ls = bfs_level_structure(g, root, ws);
      const auto dist = oracle::distances(adj, root);
      CHECK(ls.level(0).size() == 1);
      CHECK(ls.level(0)[0] == root);
      Index reached = 0, width = 0;
      for (Index i = 0; i < ls.num_levels(); ++i) {
        const auto level = ls.level(i);
        CHECK(std::is_sorted(level.begin(), level.end()));
        width = std::max(width, static_cast<Index>(level.size()));
        for (auto v : level) CHECK(dist[static_cast<std::size_t>(v)] == i);
        reached += static_cast<Index>(level.size());
      }
      CHECK(reached == static_cast<Index>(std::count_if(dist.begin(), dist.end(),
                                                         [](Index d) { return d >= 0; })));
      CHECK(ls.depth() == *std::max_element(dist.begin(), dist.end()));
      CHECK(ls.width() == width);
    }
  }
}

TEST_CASE("graph - adjacency is symmetric on corpus graphs", "[graph]") {
  for (const auto& entry : std::filesystem::directory_iterator(RCMPP_CORPUS_DIR)) {
    const auto g = build_graph(read_matrix_market(entry.path()));
    for (Index v = 0; v < g.size(); ++v) {
      const auto nb = g.neighbors(v);
      REQUIRE(std::is_sorted(nb.begin(), nb.end()));
      for (auto w : nb) {
        CHECK(w != v);
        const auto back = g.neighbors(w);
        CHECK(std::binary_search(back.begin(), back.end(), v));
      }
    }
  }
}

TEST_CASE("graph - components partition random graphs", "[graph][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = oracle::random_graph(200, 0.4, false, rng);
    const auto g = build_graph(m);
    const auto adj = oracle::adjacency_lists(m);
    const auto c = connected_components(g);
    std::vector<int> seen(200, 0);
    Index prev_first = -1;
    for (const auto& comp : c.components) {
      REQUIRE_FALSE(comp.empty());
      CHECK(comp.front() > prev_first);
      prev_first = comp.front();
      const auto d = oracle::distances(adj, comp.front());
      const auto reachable = std::count_if(d.begin(), d.end(), [](Index x) { return x >= 0; });
      CHECK(static_cast<Index>(comp.size()) == reachable);
      for (auto v : comp) {
        ++seen[static_cast<std::size_t>(v)];
        CHECK(d[static_cast<std::size_t>(v)] >= 0);
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
  }
}
