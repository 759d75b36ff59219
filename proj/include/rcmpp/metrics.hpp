#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcmpp/sparse_sym_matrix.hpp"

namespace rcmpp {

class Permutation;

/// max |i - j| over stored entries; 0 when nothing lies off the diagonal.
template <typename Scalar>
Index bandwidth(const SparseSymMatrix<Scalar>& m) {
  Index b = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    if (r.empty()) continue;
    b = std::max({b, i - r.front(), r.back() - i});
  }
  return b;
}

/// Sum over rows of (i - first stored column). Rows whose first stored
/// column lies right of the diagonal contribute nothing.
template <typename Scalar>
Index profile(const SparseSymMatrix<Scalar>& m) {
  Index p = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    if (!r.empty() && r.front() <= i) p += i - r.front();
  }
  return p;
}

// Metrics of P·A·Pᵀ evaluated straight from the permutation, without
// assembling the permuted matrix.
Index permuted_bandwidth(Index n, std::span<const Index> row_start,
                         std::span<const Index> col_index, const Permutation& p);
Index permuted_profile(Index n, std::span<const Index> row_start,
                       std::span<const Index> col_index, const Permutation& p);

template <typename Scalar>
Index bandwidth(const SparseSymMatrix<Scalar>& m, const Permutation& p) {
  return permuted_bandwidth(m.rows(), m.row_start(), m.col_index(), p);
}

template <typename Scalar>
Index profile(const SparseSymMatrix<Scalar>& m, const Permutation& p) {
  return permuted_profile(m.rows(), m.row_start(), m.col_index(), p);
}

/// (a - b) / a; empty when a == 0.
std::optional<double> relative_difference(double a, double b);

struct SeriesPoint {
  Index index;
  double value;

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// Recursive exponential smoothing with alpha = 2 / (span + 1), seeded with
/// the first value. Indices are carried through unchanged.
std::vector<SeriesPoint> exponential_smoothing(const std::vector<SeriesPoint>& series,
                                               Index span);

/// Per-matrix metric values keyed by algorithm name.
using AlgorithmValues = std::map<std::string, double>;

/// Fraction of matrices on which each algorithm attains the minimum. Every
/// algorithm tied for the minimum is credited, so the fractions can sum to
/// more than one.
std::map<std::string, double> proportion_optimal(const std::vector<AlgorithmValues>& results);

}  // namespace rcmpp
