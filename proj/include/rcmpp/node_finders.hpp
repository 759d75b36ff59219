#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rcmpp/graph.hpp"

namespace rcmpp {

/// How a finder picks the node its first level structure is rooted at.
class StartPolicy {
 public:
  enum class Mode { min_degree, explicit_node, seeded_random };

  static StartPolicy min_degree() { return StartPolicy(Mode::min_degree, {}, {}); }
  static StartPolicy explicit_node(Index node) {
    return StartPolicy(Mode::explicit_node, node, {});
  }
  static StartPolicy seeded_random(std::uint64_t seed) {
    return StartPolicy(Mode::seeded_random, {}, seed);
  }

  Mode mode() const { return mode_; }
  std::optional<Index> node() const { return node_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  /// Policy to use for the k-th component of a multi-component graph.
  /// Random seeds are mixed with k; an explicit node only applies to the
  /// component that holds it, other components fall back to min-degree.
  StartPolicy for_component(Index k, std::span<const Index> component) const;

  friend bool operator==(const StartPolicy&, const StartPolicy&) = default;

 private:
  StartPolicy(Mode mode, std::optional<Index> node, std::optional<std::uint64_t> seed)
      : mode_(mode), node_(node), seed_(seed) {}

  Mode mode_;
  std::optional<Index> node_;
  std::optional<std::uint64_t> seed_;
};

struct TraceEntry {
  Index node;
  Index eccentricity;
  Index width;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// Every node whose level structure a finder built, in order, plus the
/// node it returned.
struct FinderTrace {
  std::vector<TraceEntry> visited;
  Index result = -1;
  Index bfs_count = 0;
};

Index resolve_start(const AdjacencyGraph& g, std::span<const Index> component,
                    const StartPolicy& policy);

/// Smallest id among the minimum-degree nodes of the component.
Index mind_find(const AdjacencyGraph& g, std::span<const Index> component);

/// George-Liu pseudo-peripheral node search. Starting from the resolved
/// start node, repeatedly roots a level structure at the minimum-degree
/// node (smallest id on ties) of the deepest level and keeps it while the
/// eccentricity strictly grows. Returns the last root built.
FinderTrace gl_find(const AdjacencyGraph& g, std::span<const Index> component,
                    const StartPolicy& policy);
FinderTrace gl_find(const AdjacencyGraph& g, std::span<const Index> component,
                    const StartPolicy& policy, BfsWorkspace& ws);

/// Bi-criteria node finder: the George-Liu traversal, returning the visited
/// node of smallest width. Width ties go to the later node, so with equal
/// widths throughout the answer coincides with gl_find.
FinderTrace bnf_find(const AdjacencyGraph& g, std::span<const Index> component,
                     const StartPolicy& policy);
FinderTrace bnf_find(const AdjacencyGraph& g, std::span<const Index> component,
                     const StartPolicy& policy, BfsWorkspace& ws);

}  // namespace rcmpp
