// Writes the synthetic desk corpus used by the tests and the acceptance
// suite. Output is deterministic for a given standard library.
//
//   make_corpus <output-dir>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rcmpp/matrix_market.hpp"

namespace {

using rcmpp::Entry;
using rcmpp::Index;
using Matrix = rcmpp::SparseSymMatrix<double>;
using Edge = std::pair<Index, Index>;

struct Graph {
  Index n = 0;
  std::set<Edge> edges;

  void add(Index a, Index b) {
    if (a == b) return;
    edges.insert({std::min(a, b), std::max(a, b)});
  }
};

// Graph Laplacian plus `shift` on the diagonal; positive definite for shift > 0.
Matrix laplacian(const Graph& g, double shift, bool with_values = true) {
  std::vector<double> degree(static_cast<std::size_t>(g.n), 0.0);
  std::vector<Entry<double>> entries;
  for (auto [a, b] : g.edges) {
    entries.push_back({a, b, -1.0});
    entries.push_back({b, a, -1.0});
    degree[static_cast<std::size_t>(a)] += 1.0;
    degree[static_cast<std::size_t>(b)] += 1.0;
  }
  for (Index i = 0; i < g.n; ++i) entries.push_back({i, i, degree[static_cast<std::size_t>(i)] + shift});
  return Matrix::from_entries(g.n, std::move(entries), with_values);
}

Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Index> p(static_cast<std::size_t>(g.n));
  std::iota(p.begin(), p.end(), Index{0});
  std::shuffle(p.begin(), p.end(), rng);
  Graph out{g.n, {}};
  for (auto [a, b] : g.edges) out.add(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
  return out;
}

Graph grid2d(Index nx, Index ny, bool nine_point) {
  Graph g{nx * ny, {}};
  auto id = [nx](Index x, Index y) { return y * nx + x; };
  for (Index y = 0; y < ny; ++y)
    for (Index x = 0; x < nx; ++x) {
      if (x + 1 < nx) g.add(id(x, y), id(x + 1, y));
      if (y + 1 < ny) g.add(id(x, y), id(x, y + 1));
      if (nine_point && x + 1 < nx && y + 1 < ny) {
        g.add(id(x, y), id(x + 1, y + 1));
        g.add(id(x + 1, y), id(x, y + 1));
      }
    }
  return g;
}

Graph grid3d(Index k) {
  Graph g{k * k * k, {}};
  auto id = [k](Index x, Index y, Index z) { return (z * k + y) * k + x; };
  for (Index z = 0; z < k; ++z)
    for (Index y = 0; y < k; ++y)
      for (Index x = 0; x < k; ++x) {
        if (x + 1 < k) g.add(id(x, y, z), id(x + 1, y, z));
        if (y + 1 < k) g.add(id(x, y, z), id(x, y + 1, z));
        if (z + 1 < k) g.add(id(x, y, z), id(x, y, z + 1));
      }
  return g;
}

// Triangulated square grid with a rectangular hole punched out: an
// irregular finite-element-like mesh.
Graph holed_mesh(Index k) {
  std::vector<Index> id(static_cast<std::size_t>(k * k), -1);
  Index n = 0;
  auto inside_hole = [k](Index x, Index y) {
    return x > k / 3 && x < 2 * k / 3 && y > k / 4 && y < k / 2;
  };
  for (Index y = 0; y < k; ++y)
    for (Index x = 0; x < k; ++x)
      if (!inside_hole(x, y)) id[static_cast<std::size_t>(y * k + x)] = n++;
  Graph g{n, {}};
  auto at = [&](Index x, Index y) { return id[static_cast<std::size_t>(y * k + x)]; };
  for (Index y = 0; y < k; ++y)
    for (Index x = 0; x < k; ++x) {
      const auto a = at(x, y);
      if (a < 0) continue;
      if (x + 1 < k && at(x + 1, y) >= 0) g.add(a, at(x + 1, y));
      if (y + 1 < k && at(x, y + 1) >= 0) g.add(a, at(x, y + 1));
      if (x + 1 < k && y + 1 < k && at(x + 1, y + 1) >= 0) g.add(a, at(x + 1, y + 1));
    }
  return g;
}

// Points in the unit square joined when closer than `radius`; a spanning
// path through the x-sorted points keeps it connected.
Graph random_geometric(Index n, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
  for (auto& p : pts) p = {u(rng), u(rng)};
  Graph g{n, {}};
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const auto dx = pts[static_cast<std::size_t>(i)].first - pts[static_cast<std::size_t>(j)].first;
      const auto dy = pts[static_cast<std::size_t>(i)].second - pts[static_cast<std::size_t>(j)].second;
      if (dx * dx + dy * dy < radius * radius) g.add(i, j);
    }
  std::vector<Index> by_x(static_cast<std::size_t>(n));
  std::iota(by_x.begin(), by_x.end(), Index{0});
  std::sort(by_x.begin(), by_x.end(), [&](Index a, Index b) {
    return pts[static_cast<std::size_t>(a)].first < pts[static_cast<std::size_t>(b)].first;
  });
  for (std::size_t k = 1; k < by_x.size(); ++k) g.add(by_x[k - 1], by_x[k]);
  return g;
}

// Sparse power-network-like graph: a random tree grown by attaching each
// node to a recent one, plus a few short-range loops.
Graph power_network(Index n, Index loops, std::mt19937_64& rng) {
  Graph g{n, {}};
  for (Index v = 1; v < n; ++v) {
    std::uniform_int_distribution<Index> back(std::max<Index>(0, v - 8), v - 1);
    g.add(v, back(rng));
  }
  std::uniform_int_distribution<Index> any(0, n - 1);
  std::uniform_int_distribution<Index> hop(2, 12);
  for (Index k = 0; k < loops; ++k) {
    const auto a = any(rng);
    const auto b = std::min(n - 1, a + hop(rng));
    g.add(a, b);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g{a.n + b.n, a.edges};
  for (auto [x, y] : b.edges) g.add(x + a.n, y + a.n);
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(20240917);

  auto emit = [&](const std::string& name, const Matrix& m) {
    rcmpp::write_matrix_market(m, dir / (name + ".mtx"));
    std::cout << name << ": n=" << m.rows() << " nnz=" << m.nnz() << '\n';
  };

  emit("grid5_20x20", laplacian(grid2d(20, 20, false), 0.0 + 1e-2));
  emit("grid5_32x32_shuffled", laplacian(relabel(grid2d(32, 32, false), rng), 1e-2));
  emit("grid5_45x25_shuffled", laplacian(relabel(grid2d(45, 25, false), rng), 1e-2));
  emit("grid9_35x35_shuffled", laplacian(relabel(grid2d(35, 35, true), rng), 1e-2));
  emit("grid7_12x12x12_shuffled", laplacian(relabel(grid3d(12), rng), 1e-2));
  emit("mesh_holed_24_shuffled", laplacian(relabel(holed_mesh(24), rng), 1.0));
  emit("mesh_holed_40_shuffled", laplacian(relabel(holed_mesh(40), rng), 1.0));
  emit("rgg_300", laplacian(random_geometric(300, 0.11, rng), 1.0));
  emit("rgg_800", laplacian(random_geometric(800, 0.065, rng), 1.0));
  emit("rgg_1500", laplacian(random_geometric(1500, 0.048, rng), 1.0));
  emit("power_39", laplacian(relabel(power_network(39, 6, rng), rng), 0.5));
  emit("power_120", laplacian(relabel(power_network(120, 20, rng), rng), 0.5));
  emit("power_500", laplacian(relabel(power_network(500, 80, rng), rng), 0.5));
  emit("power_1200", laplacian(relabel(power_network(1200, 200, rng), rng), 0.5));
  emit("ladder_2x60_pattern", laplacian(relabel(grid2d(2, 60, false), rng), 1.0, false));
  emit("two_grids_shuffled", laplacian(relabel(disjoint_union(grid2d(12, 9, false),
                                                              grid2d(7, 15, true)), rng), 1.0));
  // Diagonal too small for the Laplacian: symmetric but indefinite.
  emit("grid5_15x15_indefinite", laplacian(relabel(grid2d(15, 15, false), rng), -1.5));
  return 0;
}
