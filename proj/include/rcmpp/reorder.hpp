#pragma once

#include <chrono>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rcmpp/graph.hpp"
#include "rcmpp/metrics.hpp"
#include "rcmpp/node_finders.hpp"
#include "rcmpp/sparse_sym_matrix.hpp"

namespace rcmpp {

/// Symmetric reordering. `new_of_old()[v]` is the position original index v
/// moves to.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Index> new_of_old);

  static Permutation identity(Index n);
  /// Builds the permutation that places `old_of_new[k]` at position k.
  static Permutation from_order(std::span<const Index> old_of_new);

  Index size() const { return static_cast<Index>(new_of_old_.size()); }
  Index operator[](Index old_index) const { return new_of_old_[static_cast<std::size_t>(old_index)]; }
  std::span<const Index> new_of_old() const { return new_of_old_; }
  std::vector<Index> old_of_new() const;
  Permutation inverse() const { return from_order(new_of_old_); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> new_of_old_;
};

/// Cuthill-McKee numbering. Components are numbered consecutively in
/// ComponentSet order, each from its start node; a dequeued node appends its
/// unnumbered neighbors by ascending degree, then ascending id.
Permutation cuthill_mckee(const AdjacencyGraph& g, const ComponentSet& components,
                          std::span<const Index> starts);

/// new position -> n - 1 - new position.
Permutation reverse(const Permutation& p);

/// P·A·Pᵀ: entry (i, j) moves to (p[i], p[j]), values carried along.
template <typename Scalar>
SparseSymMatrix<Scalar> apply_permutation(const SparseSymMatrix<Scalar>& m, const Permutation& p) {
  if (p.size() != m.rows()) throw std::invalid_argument("permutation length mismatch");
  const Index n = m.rows();
  const auto starts = m.row_start();
  const auto cols = m.col_index();
  const auto old_of_new = p.old_of_new();

  std::vector<Index> row_start(static_cast<std::size_t>(n) + 1, 0);
  for (Index r = 0; r < n; ++r) {
    const auto o = old_of_new[static_cast<std::size_t>(r)];
    row_start[static_cast<std::size_t>(r) + 1] = row_start[static_cast<std::size_t>(r)] +
                                                 (starts[o + 1] - starts[o]);
  }
  std::vector<Index> col_index(static_cast<std::size_t>(m.nnz()));
  std::vector<Scalar> values(m.has_values() ? static_cast<std::size_t>(m.nnz()) : 0);
  std::vector<std::pair<Index, Index>> scratch;
  for (Index r = 0; r < n; ++r) {
    const auto o = old_of_new[static_cast<std::size_t>(r)];
    scratch.clear();
    for (Index k = starts[o]; k < starts[o + 1]; ++k) scratch.emplace_back(p[cols[k]], k);
    std::sort(scratch.begin(), scratch.end());
    auto dst = static_cast<std::size_t>(row_start[static_cast<std::size_t>(r)]);
    for (const auto& [c, k] : scratch) {
      col_index[dst] = c;
      if (m.has_values()) values[dst] = m.values()[static_cast<std::size_t>(k)];
      ++dst;
    }
  }
  std::optional<std::vector<Scalar>> vals;
  if (m.has_values()) vals = std::move(values);
  return SparseSymMatrix<Scalar>(n, std::move(row_start), std::move(col_index), std::move(vals));
}

enum class Algorithm { rcm_pp, gl_rcm, mind_rcm, none };

/// "RCM++", "GL_RCM", "MIND_RCM", "none".
std::string_view to_string(Algorithm a);
/// Accepts the canonical names and the short CLI forms (rcm++, gl, mind,
/// none), case-insensitively.
Algorithm parse_algorithm(std::string_view name);

struct ReorderReport {
  Algorithm algorithm = Algorithm::none;
  std::vector<Index> start_nodes;
  Index bandwidth_before = 0;
  Index bandwidth_after = 0;
  Index profile_before = 0;
  Index profile_after = 0;
  std::chrono::nanoseconds finder_time{0};
  std::chrono::nanoseconds ordering_time{0};
};

/// Start node for every component, chosen by the algorithm's finder.
/// Algorithm::none yields an empty list.
std::vector<Index> find_start_nodes(const AdjacencyGraph& g, const ComponentSet& components,
                                    Algorithm algorithm, const StartPolicy& policy,
                                    BfsWorkspace& ws);

struct Ordering {
  Permutation permutation;
  std::vector<Index> start_nodes;
  std::chrono::nanoseconds finder_time{0};
  std::chrono::nanoseconds ordering_time{0};
};

/// Finder per component, then Cuthill-McKee, then reversal.
Ordering rcm_ordering(const AdjacencyGraph& g, const ComponentSet& components,
                      Algorithm algorithm, const StartPolicy& policy);

struct ReorderResult {
  Permutation permutation;
  ReorderReport report;
};

template <typename Scalar>
ReorderResult rcm_pipeline(const SparseSymMatrix<Scalar>& m, Algorithm algorithm,
                           const StartPolicy& policy = StartPolicy::min_degree()) {
  const auto g = build_graph(m);
  const auto components = connected_components(g);
  auto ordering = rcm_ordering(g, components, algorithm, policy);
  const auto permuted = apply_permutation(m, ordering.permutation);

  ReorderReport report;
  report.algorithm = algorithm;
  report.start_nodes = std::move(ordering.start_nodes);
  report.bandwidth_before = bandwidth(m);
  report.profile_before = profile(m);
  report.bandwidth_after = bandwidth(permuted);
  report.profile_after = profile(permuted);
  report.finder_time = ordering.finder_time;
  report.ordering_time = ordering.ordering_time;
  return {std::move(ordering.permutation), std::move(report)};
}

}  // namespace rcmpp
