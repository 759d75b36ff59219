#include "rcmpp/node_finders.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace rcmpp {

namespace {

Index min_degree_node(const AdjacencyGraph& g, std::span<const Index> nodes) {
  Index best = nodes.front();
  for (auto v : nodes) {
    const auto d = g.degree(v), bd = g.degree(best);
    if (d < bd || (d == bd && v < best)) best = v;
  }
  return best;
}

void require_nonempty(std::span<const Index> component) {
  if (component.empty()) throw std::invalid_argument("empty component");
}

enum class Selection { last_root, min_width };

// The George-Liu walk shared by both finders; they differ only in which
// visited node they report.
FinderTrace george_liu_walk(const AdjacencyGraph& g, std::span<const Index> component,
                            const StartPolicy& policy, BfsWorkspace& ws, Selection select) {
  require_nonempty(component);
  FinderTrace trace;
  Index record_width = 0;
  Index recorded = -1;
  auto visit = [&](const LevelStructure& ls) {
    trace.visited.push_back({ls.root(), ls.depth(), ls.width()});
    ++trace.bfs_count;
    if (recorded < 0 || ls.width() <= record_width) {
      record_width = ls.width();
      recorded = ls.root();
    }
  };

  auto current = bfs_level_structure(g, resolve_start(g, component, policy), ws);
  visit(current);

  // A lone node is its own deepest level; rebuilding it would only repeat
  // the same entry.
  Index last = current.root();
  if (current.depth() > 0) {
    while (true) {
      const Index candidate = min_degree_node(g, current.deepest_level());
      auto next = bfs_level_structure(g, candidate, ws);
      visit(next);
      last = candidate;
      if (next.depth() > current.depth()) {
        current = std::move(next);
      } else {
        break;
      }
    }
  }

  trace.result = select == Selection::last_root ? last : recorded;
  return trace;
}

}  // namespace

StartPolicy StartPolicy::for_component(Index k, std::span<const Index> component) const {
  switch (mode_) {
    case Mode::min_degree:
      return *this;
    case Mode::explicit_node:
      if (std::find(component.begin(), component.end(), *node_) != component.end())
        return *this;
      return min_degree();
    case Mode::seeded_random:
      if (k == 0) return *this;
      // splitmix64 step keeps per-component streams decorrelated.
      std::uint64_t z = *seed_ + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return seeded_random(z ^ (z >> 31));
  }
  return *this;
}

Index resolve_start(const AdjacencyGraph& g, std::span<const Index> component,
                    const StartPolicy& policy) {
  require_nonempty(component);
  switch (policy.mode()) {
    case StartPolicy::Mode::min_degree:
      return min_degree_node(g, component);
    case StartPolicy::Mode::explicit_node: {
      const auto node = *policy.node();
      if (std::find(component.begin(), component.end(), node) == component.end())
        throw std::invalid_argument("start node " + std::to_string(node) +
                                    " is not in the component");
      return node;
    }
    case StartPolicy::Mode::seeded_random: {
      std::mt19937_64 rng(*policy.seed());
      std::uniform_int_distribution<std::size_t> pick(0, component.size() - 1);
      return component[pick(rng)];
    }
  }
  throw std::logic_error("unknown start policy");
}

Index mind_find(const AdjacencyGraph& g, std::span<const Index> component) {
  require_nonempty(component);
  return min_degree_node(g, component);
}

FinderTrace gl_find(const AdjacencyGraph& g, std::span<const Index> component,
                    const StartPolicy& policy, BfsWorkspace& ws) {
  return george_liu_walk(g, component, policy, ws, Selection::last_root);
}

FinderTrace gl_find(const AdjacencyGraph& g, std::span<const Index> component,
                    const StartPolicy& policy) {
  BfsWorkspace ws(g.size());
  return gl_find(g, component, policy, ws);
}

FinderTrace bnf_find(const AdjacencyGraph& g, std::span<const Index> component,
                     const StartPolicy& policy, BfsWorkspace& ws) {
  return george_liu_walk(g, component, policy, ws, Selection::min_width);
}

FinderTrace bnf_find(const AdjacencyGraph& g, std::span<const Index> component,
                     const StartPolicy& policy) {
  BfsWorkspace ws(g.size());
  return bnf_find(g, component, policy, ws);
}

}  // namespace rcmpp
