#pragma once

#include <span>
#include <vector>

#include "rcmpp/sparse_sym_matrix.hpp"

namespace rcmpp {

/// Undirected graph of the off-diagonal pattern. Neighbor lists are
/// ascending and there are no self-loops.
class AdjacencyGraph {
 public:
  AdjacencyGraph() : offsets_(1, 0) {}
  AdjacencyGraph(std::vector<Index> offsets, std::vector<Index> adjacency);

  Index size() const { return static_cast<Index>(offsets_.size()) - 1; }
  Index num_edges() const { return static_cast<Index>(adjacency_.size()) / 2; }

  std::span<const Index> neighbors(Index v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return std::span<const Index>(adjacency_).subspan(static_cast<std::size_t>(b),
                                                      static_cast<std::size_t>(e - b));
  }

  Index degree(Index v) const {
    return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
  }

  std::span<const Index> offsets() const { return offsets_; }
  std::span<const Index> adjacency() const { return adjacency_; }

 private:
  std::vector<Index> offsets_;
  std::vector<Index> adjacency_;
};

AdjacencyGraph build_graph_from_pattern(Index n, std::span<const Index> row_start,
                                        std::span<const Index> col_index);

template <typename Scalar>
AdjacencyGraph build_graph(const SparseSymMatrix<Scalar>& m) {
  return build_graph_from_pattern(m.rows(), m.row_start(), m.col_index());
}

/// Rooted BFS partition. Level 0 is the root alone; nodes inside a level
/// are in ascending id order. Storage is flat: `nodes()` lists every
/// reached node level by level.
class LevelStructure {
 public:
  LevelStructure(Index root, std::vector<Index> nodes, std::vector<Index> level_start);

  Index root() const { return root_; }
  /// Eccentricity of the root within its component.
  Index depth() const { return num_levels() - 1; }
  Index width() const { return width_; }
  Index num_levels() const { return static_cast<Index>(level_start_.size()) - 1; }

  std::span<const Index> level(Index i) const {
    const auto b = level_start_[static_cast<std::size_t>(i)];
    const auto e = level_start_[static_cast<std::size_t>(i) + 1];
    return std::span<const Index>(nodes_).subspan(static_cast<std::size_t>(b),
                                                  static_cast<std::size_t>(e - b));
  }
  std::span<const Index> deepest_level() const { return level(depth()); }
  std::span<const Index> nodes() const { return nodes_; }

 private:
  Index root_;
  std::vector<Index> nodes_;
  std::vector<Index> level_start_;
  Index width_ = 0;
};

/// Scratch marks reused across BFS calls on one graph. Only touched nodes
/// are reset, so repeated searches on small components stay cheap.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(Index n) : mark_(static_cast<std::size_t>(n), false) {}
  Index size() const { return static_cast<Index>(mark_.size()); }

 private:
  friend LevelStructure bfs_level_structure(const AdjacencyGraph&, Index, BfsWorkspace&);
  std::vector<bool> mark_;
};

LevelStructure bfs_level_structure(const AdjacencyGraph& g, Index root);
LevelStructure bfs_level_structure(const AdjacencyGraph& g, Index root, BfsWorkspace& ws);

struct ComponentSet {
  /// Each component sorted ascending; components ordered by smallest id.
  std::vector<std::vector<Index>> components;
  /// component_of[v] = index into `components`.
  std::vector<Index> component_of;

  Index size() const { return static_cast<Index>(components.size()); }
};

ComponentSet connected_components(const AdjacencyGraph& g);

}  // namespace rcmpp
