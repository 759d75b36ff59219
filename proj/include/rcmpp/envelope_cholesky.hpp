#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rcmpp/sparse_sym_matrix.hpp"

namespace rcmpp {

class NotPositiveDefinite : public std::runtime_error {
 public:
  explicit NotPositiveDefinite(Index row)
      : std::runtime_error("non-positive pivot at row " + std::to_string(row)), row_(row) {}
  Index row() const { return row_; }

 private:
  Index row_;
};

/// Lower Cholesky factor in row-envelope (skyline) storage. Row i holds the
/// dense segment from first_col(i) to the diagonal, so the stored entry
/// count is profile + n.
template <typename Scalar = double>
class EnvelopeFactor {
 public:
  EnvelopeFactor() = default;
  EnvelopeFactor(std::vector<Index> first_col, std::vector<Index> row_offset,
                 std::vector<Scalar> entries)
      : first_col_(std::move(first_col)),
        row_offset_(std::move(row_offset)),
        entries_(std::move(entries)) {}

  Index size() const { return static_cast<Index>(first_col_.size()); }
  Index first_col(Index i) const { return first_col_[static_cast<std::size_t>(i)]; }
  Index entry_count() const { return static_cast<Index>(entries_.size()); }

  /// L(i, first_col(i)) .. L(i, i).
  std::span<const Scalar> row(Index i) const {
    const auto b = row_offset_[static_cast<std::size_t>(i)];
    const auto e = row_offset_[static_cast<std::size_t>(i) + 1];
    return std::span<const Scalar>(entries_).subspan(static_cast<std::size_t>(b),
                                                     static_cast<std::size_t>(e - b));
  }
  Scalar diagonal(Index i) const { return entries_[static_cast<std::size_t>(row_offset_[static_cast<std::size_t>(i) + 1] - 1)]; }

  /// L(i, j), zero outside the envelope.
  Scalar operator()(Index i, Index j) const {
    if (j > i || j < first_col(i)) return Scalar(0);
    return row(i)[static_cast<std::size_t>(j - first_col(i))];
  }

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> to_dense() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> l =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(size(), size());
    for (Index i = 0; i < size(); ++i)
      for (Index j = first_col(i); j <= i; ++j) l(i, j) = (*this)(i, j);
    return l;
  }

 private:
  std::vector<Index> first_col_;
  std::vector<Index> row_offset_;
  std::vector<Scalar> entries_;
};

/// A = L·Lᵀ without pivoting; fill stays inside the row envelope. Only the
/// lower triangle of A is read. Throws NotPositiveDefinite when a pivot is
/// at or below 1e-13 times the largest diagonal entry of A.
template <typename Scalar>
EnvelopeFactor<Scalar> envelope_cholesky(const SparseSymMatrix<Scalar>& a) {
  if (!a.has_values()) throw std::invalid_argument("Cholesky needs numeric values");
  const Index n = a.rows();
  using Segment = Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>;

  std::vector<Index> first_col(static_cast<std::size_t>(n));
  std::vector<Index> row_offset(static_cast<std::size_t>(n) + 1, 0);
  Scalar max_diag(0);
  for (Index i = 0; i < n; ++i) {
    const auto r = a.row(i);
    first_col[static_cast<std::size_t>(i)] = r.empty() ? i : std::min(r.front(), i);
    row_offset[static_cast<std::size_t>(i) + 1] =
        row_offset[static_cast<std::size_t>(i)] + (i - first_col[static_cast<std::size_t>(i)] + 1);
  }

  std::vector<Scalar> entries(static_cast<std::size_t>(row_offset.back()), Scalar(0));
  for (Index i = 0; i < n; ++i) {
    const auto cols = a.row(i);
    const auto vals = a.row_values(i);
    const auto base = row_offset[static_cast<std::size_t>(i)] - first_col[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < cols.size() && cols[k] <= i; ++k) {
      entries[static_cast<std::size_t>(base + cols[k])] = vals[k];
      if (cols[k] == i) max_diag = std::max(max_diag, vals[k]);
    }
  }
  const Scalar tolerance = Scalar(1e-13) * max_diag;

  for (Index i = 0; i < n; ++i) {
    const auto fi = first_col[static_cast<std::size_t>(i)];
    Scalar* li = entries.data() + (row_offset[static_cast<std::size_t>(i)] - fi);
    for (Index j = fi; j < i; ++j) {
      const auto fj = first_col[static_cast<std::size_t>(j)];
      const Scalar* lj = entries.data() + (row_offset[static_cast<std::size_t>(j)] - fj);
      const auto k0 = std::max(fi, fj);
      Scalar s = li[j];
      if (j > k0) s -= Segment(li + k0, j - k0).dot(Segment(lj + k0, j - k0));
      li[j] = s / lj[j];
    }
    Scalar d = li[i];
    if (i > fi) d -= Segment(li + fi, i - fi).squaredNorm();
    if (!(d > tolerance)) throw NotPositiveDefinite(i);
    li[i] = std::sqrt(d);
  }
  return EnvelopeFactor<Scalar>(std::move(first_col), std::move(row_offset), std::move(entries));
}

/// Solves L·Lᵀ·x = b by forward then backward substitution.
template <typename Scalar>
Vector<Scalar> solve(const EnvelopeFactor<Scalar>& f, const Vector<Scalar>& b) {
  if (b.size() != f.size()) throw std::invalid_argument("right-hand side length mismatch");
  using Segment = Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>;
  const Index n = f.size();
  Vector<Scalar> x = b;
  for (Index i = 0; i < n; ++i) {
    const auto fi = f.first_col(i);
    const auto r = f.row(i);
    Scalar s = x[i];
    if (i > fi) s -= Segment(r.data(), i - fi).dot(x.segment(fi, i - fi));
    x[i] = s / r.back();
  }
  for (Index i = n - 1; i >= 0; --i) {
    const auto fi = f.first_col(i);
    const auto r = f.row(i);
    x[i] /= r.back();
    if (i > fi) x.segment(fi, i - fi) -= x[i] * Segment(r.data(), i - fi);
  }
  return x;
}

}  // namespace rcmpp
