#pragma once

#include <filesystem>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rcmpp/sparse_sym_matrix.hpp"

namespace rcmpp {

/// Raised for any malformed or unsupported Matrix Market input. `line()` is
/// the 1-based line number where the problem was detected (0 if unknown).
class MatrixMarketError : public std::runtime_error {
 public:
  MatrixMarketError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseOptions {
  /// Accept `general` files that are not structurally symmetric by building
  /// the pattern of A + Aᵀ.
  bool symmetrize = false;
};

SparseSymMatrix<double> parse_matrix_market(std::istream& source, ParseOptions options = {});

SparseSymMatrix<double> read_matrix_market(const std::filesystem::path& path,
                                           ParseOptions options = {});

/// Coordinate format, symmetric storage (lower triangle plus diagonal),
/// 1-based. Values are printed with enough digits to round-trip exactly.
template <typename Scalar>
void write_matrix_market(const SparseSymMatrix<Scalar>& m, std::ostream& sink) {
  Index lower = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (auto j : m.row(i))
      if (j <= i) ++lower;

  sink << "%%MatrixMarket matrix coordinate " << (m.has_values() ? "real" : "pattern")
       << " symmetric\n";
  sink << m.rows() << ' ' << m.cols() << ' ' << lower << '\n';
  const auto old_precision = sink.precision(std::numeric_limits<Scalar>::max_digits10);
  for (Index i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    for (std::size_t k = 0; k < r.size() && r[k] <= i; ++k) {
      sink << (i + 1) << ' ' << (r[k] + 1);
      if (m.has_values()) sink << ' ' << m.row_values(i)[k];
      sink << '\n';
    }
  }
  sink.precision(old_precision);
  sink.flush();
  if (!sink) throw std::runtime_error("failed writing Matrix Market output");
}

template <typename Scalar>
void write_matrix_market(const SparseSymMatrix<Scalar>& m, const std::filesystem::path& path);

}  // namespace rcmpp
