#include "rcmpp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rcmpp {

AdjacencyGraph::AdjacencyGraph(std::vector<Index> offsets, std::vector<Index> adjacency)
    : offsets_(std::move(offsets)), adjacency_(std::move(adjacency)) {
  if (offsets_.empty() || offsets_.front() != 0 ||
      offsets_.back() != static_cast<Index>(adjacency_.size()))
    throw std::invalid_argument("inconsistent adjacency offsets");
}

AdjacencyGraph build_graph_from_pattern(Index n, std::span<const Index> row_start,
                                        std::span<const Index> col_index) {
  std::vector<Index> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Index> adjacency;
  adjacency.reserve(col_index.size());
  for (Index i = 0; i < n; ++i) {
    for (Index k = row_start[i]; k < row_start[i + 1]; ++k) {
      const auto j = col_index[static_cast<std::size_t>(k)];
      if (j != i) adjacency.push_back(j);
    }
    offsets[static_cast<std::size_t>(i) + 1] = static_cast<Index>(adjacency.size());
  }
  return AdjacencyGraph(std::move(offsets), std::move(adjacency));
}

LevelStructure::LevelStructure(Index root, std::vector<Index> nodes,
                               std::vector<Index> level_start)
    : root_(root), nodes_(std::move(nodes)), level_start_(std::move(level_start)) {
  for (Index i = 0; i < num_levels(); ++i)
    width_ = std::max(width_, static_cast<Index>(level(i).size()));
}

LevelStructure bfs_level_structure(const AdjacencyGraph& g, Index root, BfsWorkspace& ws) {
  if (root < 0 || root >= g.size())
    throw std::out_of_range("BFS root " + std::to_string(root) + " outside [0, " +
                            std::to_string(g.size()) + ")");
  if (ws.size() != g.size()) throw std::invalid_argument("workspace size mismatch");

  auto& mark = ws.mark_;
  std::vector<Index> nodes{root};
  std::vector<Index> level_start{0, 1};
  mark[static_cast<std::size_t>(root)] = true;

  std::size_t begin = 0;
  while (begin < nodes.size()) {
    const std::size_t end = nodes.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (auto w : g.neighbors(nodes[k])) {
        if (!mark[static_cast<std::size_t>(w)]) {
          mark[static_cast<std::size_t>(w)] = true;
          nodes.push_back(w);
        }
      }
    }
    if (nodes.size() == end) break;
    std::sort(nodes.begin() + static_cast<std::ptrdiff_t>(end), nodes.end());
    level_start.push_back(static_cast<Index>(nodes.size()));
    begin = end;
  }

  for (auto v : nodes) mark[static_cast<std::size_t>(v)] = false;
  return LevelStructure(root, std::move(nodes), std::move(level_start));
}

LevelStructure bfs_level_structure(const AdjacencyGraph& g, Index root) {
  BfsWorkspace ws(g.size());
  return bfs_level_structure(g, root, ws);
}

ComponentSet connected_components(const AdjacencyGraph& g) {
  ComponentSet out;
  out.component_of.assign(static_cast<std::size_t>(g.size()), -1);
  std::vector<Index> stack;
  for (Index s = 0; s < g.size(); ++s) {
    if (out.component_of[static_cast<std::size_t>(s)] >= 0) continue;
    const Index id = out.size();
    auto& comp = out.components.emplace_back();
    out.component_of[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto w : g.neighbors(v)) {
        if (out.component_of[static_cast<std::size_t>(w)] < 0) {
          out.component_of[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return out;
}

}  // namespace rcmpp
