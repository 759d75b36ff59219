#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace rcmpp {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// One coordinate entry, as read from a file or produced by a permutation.
template <typename Scalar = double>
struct Entry {
  Index row;
  Index col;
  Scalar value{};
};

/// Compressed sparse row storage of a structurally symmetric square matrix.
///
/// Every stored entry is a structural nonzero, explicit zeros included.
/// Numeric values are optional: pattern matrices carry structure only.
/// Column indices are strictly ascending within each row and the pattern
/// is symmetric; the constructor rejects anything else.
template <typename Scalar = double>
class SparseSymMatrix {
 public:
  using scalar_type = Scalar;

  SparseSymMatrix() : row_start_(1, 0) {}

  SparseSymMatrix(Index n, std::vector<Index> row_start,
                  std::vector<Index> col_index,
                  std::optional<std::vector<Scalar>> values = std::nullopt)
      : n_(n),
        row_start_(std::move(row_start)),
        col_index_(std::move(col_index)),
        values_(std::move(values)) {
    validate();
  }

  /// Assembles a matrix from coordinates. Duplicates are summed. When
  /// `symmetrize` is false the coordinates must already be structurally
  /// symmetric; otherwise the pattern of A + Aᵀ is built and values become
  /// (A + Aᵀ)/2, which leaves symmetric input unchanged.
  static SparseSymMatrix from_entries(Index n, std::vector<Entry<Scalar>> entries,
                                      bool with_values, bool symmetrize = false) {
    if (n < 0) throw std::invalid_argument("negative dimension");
    for (const auto& e : entries) {
      if (e.row < 0 || e.row >= n || e.col < 0 || e.col >= n)
        throw std::out_of_range("entry (" + std::to_string(e.row) + ", " +
                                std::to_string(e.col) + ") outside " +
                                std::to_string(n) + "x" + std::to_string(n));
    }
    if (symmetrize) {
      const auto original = entries.size();
      entries.reserve(2 * original);
      for (std::size_t k = 0; k < original; ++k) {
        auto e = entries[k];
        if (e.row == e.col) continue;
        entries[k].value = e.value / Scalar(2);
        entries.push_back({e.col, e.row, e.value / Scalar(2)});
      }
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    std::vector<Index> row_start(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Index> col_index;
    std::vector<Scalar> values;
    col_index.reserve(entries.size());
    if (with_values) values.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& e = entries[k];
      if (k > 0 && entries[k - 1].row == e.row && entries[k - 1].col == e.col) {
        if (with_values) values.back() += e.value;
        continue;
      }
      ++row_start[static_cast<std::size_t>(e.row) + 1];
      col_index.push_back(e.col);
      if (with_values) values.push_back(e.value);
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
      row_start[i + 1] += row_start[i];

    std::optional<std::vector<Scalar>> vals;
    if (with_values) vals = std::move(values);
    return SparseSymMatrix(n, std::move(row_start), std::move(col_index), std::move(vals));
  }

  Index rows() const { return n_; }
  Index cols() const { return n_; }
  Index size() const { return n_; }
  Index nnz() const { return static_cast<Index>(col_index_.size()); }
  bool has_values() const { return values_.has_value(); }

  std::span<const Index> row_start() const { return row_start_; }
  std::span<const Index> col_index() const { return col_index_; }

  std::span<const Scalar> values() const {
    if (!values_) throw std::logic_error("pattern matrix has no values");
    return *values_;
  }

  std::span<const Index> row(Index i) const {
    const auto b = row_start_[static_cast<std::size_t>(i)];
    const auto e = row_start_[static_cast<std::size_t>(i) + 1];
    return std::span<const Index>(col_index_).subspan(static_cast<std::size_t>(b),
                                                      static_cast<std::size_t>(e - b));
  }

  std::span<const Scalar> row_values(Index i) const {
    const auto b = row_start_[static_cast<std::size_t>(i)];
    const auto e = row_start_[static_cast<std::size_t>(i) + 1];
    return values().subspan(static_cast<std::size_t>(b), static_cast<std::size_t>(e - b));
  }

  /// Position of (i, j) in the entry arrays, or -1 when not stored.
  Index find(Index i, Index j) const {
    const auto r = row(i);
    const auto it = std::lower_bound(r.begin(), r.end(), j);
    if (it == r.end() || *it != j) return -1;
    return row_start_[static_cast<std::size_t>(i)] + (it - r.begin());
  }

  bool contains(Index i, Index j) const { return find(i, j) >= 0; }

  /// Drops the numeric values, keeping the pattern.
  SparseSymMatrix pattern() const { return SparseSymMatrix(n_, row_start_, col_index_); }

  friend bool operator==(const SparseSymMatrix&, const SparseSymMatrix&) = default;

 private:
  void validate() const {
    if (n_ < 0) throw std::invalid_argument("negative dimension");
    if (row_start_.size() != static_cast<std::size_t>(n_) + 1)
      throw std::invalid_argument("row_start must have n+1 entries");
    if (row_start_.front() != 0) throw std::invalid_argument("row_start[0] must be 0");
    if (row_start_.back() != static_cast<Index>(col_index_.size()))
      throw std::invalid_argument("row_start[n] must equal the entry count");
    if (values_ && values_->size() != col_index_.size())
      throw std::invalid_argument("values and col_index differ in length");
    for (Index i = 0; i < n_; ++i) {
      const auto b = row_start_[static_cast<std::size_t>(i)];
      const auto e = row_start_[static_cast<std::size_t>(i) + 1];
      if (e < b) throw std::invalid_argument("row_start must be nondecreasing");
      for (Index k = b; k < e; ++k) {
        const auto j = col_index_[static_cast<std::size_t>(k)];
        if (j < 0 || j >= n_) throw std::out_of_range("column index out of range");
        if (k > b && col_index_[static_cast<std::size_t>(k) - 1] >= j)
          throw std::invalid_argument("column indices must be strictly ascending in row " +
                                      std::to_string(i));
      }
    }
    for (Index i = 0; i < n_; ++i) {
      for (auto j : row(i)) {
        if (!contains(j, i))
          throw std::invalid_argument("pattern is not symmetric: (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ") has no transpose");
      }
    }
  }

  Index n_ = 0;
  std::vector<Index> row_start_;
  std::vector<Index> col_index_;
  std::optional<std::vector<Scalar>> values_;
};

/// y = A x. Requires values.
template <typename Scalar>
Vector<Scalar> multiply(const SparseSymMatrix<Scalar>& a, const Vector<Scalar>& x) {
  if (x.size() != a.rows()) throw std::invalid_argument("dimension mismatch in multiply");
  Vector<Scalar> y = Vector<Scalar>::Zero(a.rows());
  const auto cols = a.col_index();
  const auto vals = a.values();
  const auto starts = a.row_start();
  for (Index i = 0; i < a.rows(); ++i) {
    Scalar sum(0);
    for (Index k = starts[i]; k < starts[i + 1]; ++k) sum += vals[k] * x[cols[k]];
    y[i] = sum;
  }
  return y;
}

/// Copies into an Eigen sparse matrix; pattern matrices get unit values.
template <typename Scalar>
Eigen::SparseMatrix<Scalar, Eigen::RowMajor> to_eigen(const SparseSymMatrix<Scalar>& a) {
  std::vector<Eigen::Triplet<Scalar>> triplets;
  triplets.reserve(static_cast<std::size_t>(a.nnz()));
  for (Index i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    for (std::size_t k = 0; k < r.size(); ++k)
      triplets.emplace_back(i, r[k], a.has_values() ? a.row_values(i)[k] : Scalar(1));
  }
  Eigen::SparseMatrix<Scalar, Eigen::RowMajor> out(a.rows(), a.cols());
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

}  // namespace rcmpp
