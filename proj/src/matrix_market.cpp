#include "rcmpp/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace rcmpp {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

enum class Field { real, integer, pattern };
enum class Storage { symmetric, general };

struct Header {
  Field field;
  Storage storage;
};

Header parse_header(const std::string& line) {
  std::istringstream in(line);
  std::string banner, object, format, field, symmetry;
  in >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket") throw MatrixMarketError("missing %%MatrixMarket banner", 1);
  object = lowercase(object);
  format = lowercase(format);
  field = lowercase(field);
  symmetry = lowercase(symmetry);
  if (object != "matrix") throw MatrixMarketError("unsupported object '" + object + "'", 1);
  if (format != "coordinate")
    throw MatrixMarketError("unsupported format '" + format + "' (only coordinate)", 1);

  Header h{};
  if (field == "real" || field == "double") {
    h.field = Field::real;
  } else if (field == "integer") {
    h.field = Field::integer;
  } else if (field == "pattern") {
    h.field = Field::pattern;
  } else if (field == "complex") {
    throw MatrixMarketError("complex matrices are not supported", 1);
  } else {
    throw MatrixMarketError("unknown field '" + field + "'", 1);
  }

  if (symmetry == "symmetric") {
    h.storage = Storage::symmetric;
  } else if (symmetry == "general") {
    h.storage = Storage::general;
  } else {
    throw MatrixMarketError("unsupported symmetry '" + symmetry + "'", 1);
  }
  return h;
}

}  // namespace

SparseSymMatrix<double> parse_matrix_market(std::istream& source, ParseOptions options) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(source, line)) throw MatrixMarketError("empty input", 0);
  ++line_no;
  const Header header = parse_header(line);

  long long rows = -1, cols = -1, declared = -1;
  while (std::getline(source, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || blank(line)) continue;
    std::istringstream in(line);
    if (!(in >> rows >> cols >> declared) || rows < 0 || cols < 0 || declared < 0)
      throw MatrixMarketError("malformed size line", line_no);
    break;
  }
  if (rows < 0) throw MatrixMarketError("missing size line", line_no);
  if (rows != cols)
    throw MatrixMarketError("matrix is not square (" + std::to_string(rows) + "x" +
                                std::to_string(cols) + ")",
                            line_no);

  const Index n = static_cast<Index>(rows);
  const bool with_values = header.field != Field::pattern;
  std::vector<Entry<double>> entries;
  entries.reserve(static_cast<std::size_t>(declared) *
                  (header.storage == Storage::symmetric ? 2 : 1));

  long long seen = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%' || blank(line)) continue;
    if (seen == declared) throw MatrixMarketError("more entries than declared", line_no);
    std::istringstream in(line);
    long long i = 0, j = 0;
    double v = 1.0;
    if (!(in >> i >> j)) throw MatrixMarketError("malformed entry", line_no);
    if (with_values && !(in >> v)) throw MatrixMarketError("entry is missing its value", line_no);
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw MatrixMarketError("index (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") out of range",
                              line_no);
    ++seen;
    Entry<double> e{static_cast<Index>(i - 1), static_cast<Index>(j - 1), v};
    if (header.storage == Storage::symmetric) {
      // Some writers emit the upper triangle instead of the lower one.
      if (e.col > e.row) std::swap(e.row, e.col);
      entries.push_back(e);
      if (e.row != e.col) entries.push_back({e.col, e.row, e.value});
    } else {
      entries.push_back(e);
    }
  }
  if (seen != declared)
    throw MatrixMarketError("expected " + std::to_string(declared) + " entries, found " +
                                std::to_string(seen),
                            line_no);

  if (header.storage == Storage::general && options.symmetrize)
    return SparseSymMatrix<double>::from_entries(n, std::move(entries), with_values, true);
  try {
    return SparseSymMatrix<double>::from_entries(n, std::move(entries), with_values);
  } catch (const std::invalid_argument& e) {
    throw MatrixMarketError(std::string("general matrix is not structurally symmetric (") +
                                e.what() + "); use the symmetrize option",
                            0);
  }
}

SparseSymMatrix<double> read_matrix_market(const std::filesystem::path& path,
                                           ParseOptions options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_matrix_market(in, options);
  } catch (const MatrixMarketError& e) {
    throw MatrixMarketError(path.string() + ": " + e.what(), 0);
  }
}

template <typename Scalar>
void write_matrix_market(const SparseSymMatrix<Scalar>& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_matrix_market(m, static_cast<std::ostream&>(out));
}

template void write_matrix_market(const SparseSymMatrix<double>&, const std::filesystem::path&);
template void write_matrix_market(const SparseSymMatrix<float>&, const std::filesystem::path&);

}  // namespace rcmpp
