#include "rcmpp/metrics.hpp"

#include <cstdlib>
#include <stdexcept>

#include "rcmpp/reorder.hpp"

namespace rcmpp {

Index permuted_bandwidth(Index n, std::span<const Index> row_start,
                         std::span<const Index> col_index, const Permutation& p) {
  if (p.size() != n) throw std::invalid_argument("permutation length mismatch");
  Index b = 0;
  for (Index i = 0; i < n; ++i)
    for (Index k = row_start[i]; k < row_start[i + 1]; ++k)
      b = std::max(b, std::abs(p[i] - p[col_index[k]]));
  return b;
}

Index permuted_profile(Index n, std::span<const Index> row_start,
                       std::span<const Index> col_index, const Permutation& p) {
  if (p.size() != n) throw std::invalid_argument("permutation length mismatch");
  Index total = 0;
  for (Index i = 0; i < n; ++i) {
    if (row_start[i] == row_start[i + 1]) continue;
    Index first = n;
    for (Index k = row_start[i]; k < row_start[i + 1]; ++k)
      first = std::min(first, p[col_index[k]]);
    if (first <= p[i]) total += p[i] - first;
  }
  return total;
}

std::optional<double> relative_difference(double a, double b) {
  if (a == 0.0) return std::nullopt;
  return (a - b) / a;
}

std::vector<SeriesPoint> exponential_smoothing(const std::vector<SeriesPoint>& series,
                                               Index span) {
  if (span < 1) throw std::invalid_argument("smoothing span must be at least 1");
  if (series.empty()) throw std::invalid_argument("cannot smooth an empty series");
  const double alpha = 2.0 / (static_cast<double>(span) + 1.0);
  std::vector<SeriesPoint> out;
  out.reserve(series.size());
  double s = series.front().value;
  for (const auto& pt : series) {
    if (!out.empty()) s = alpha * pt.value + (1.0 - alpha) * s;
    out.push_back({pt.index, s});
  }
  return out;
}

std::map<std::string, double> proportion_optimal(const std::vector<AlgorithmValues>& results) {
  std::map<std::string, double> out;
  if (results.empty()) return out;
  for (const auto& [name, value] : results.front()) out[name] = 0.0;
  for (const auto& row : results) {
    if (row.size() != out.size())
      throw std::invalid_argument("matrices report different algorithm sets");
    double best = 0.0;
    bool first = true;
    for (const auto& [name, value] : row) {
      if (!out.contains(name))
        throw std::invalid_argument("unexpected algorithm '" + name + "'");
      if (first || value < best) best = value;
      first = false;
    }
    for (const auto& [name, value] : row)
      if (value == best) out[name] += 1.0;
  }
  for (auto& [name, count] : out) count /= static_cast<double>(results.size());
  return out;
}

}  // namespace rcmpp
