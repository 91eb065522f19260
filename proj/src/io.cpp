#include "ffkm/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace ffkm {

parse_error::parse_error(const std::string& path, std::size_t line,
                         const std::string& message)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

struct ParsedTable {
  std::vector<double> values;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

// One row per non-blank line, whitespace-separated finite numeric tokens.
// With `labeled`, the trailing integer label column is dropped.
ParsedTable parse_table(const std::string& path, bool labeled) {
  std::ifstream in(path);
  if (!in) throw parse_error(path, 0, "cannot open file");

  ParsedTable table;
  std::string line;
  std::size_t lineno = 0;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++lineno;
    row.clear();
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
      while (p != end && std::isspace(static_cast<unsigned char>(*p))) ++p;
      if (p == end) break;
      double value = 0.0;
      const auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc{} ||
          (next != end && !std::isspace(static_cast<unsigned char>(*next))))
        throw parse_error(path, lineno, "non-numeric token");
      if (!std::isfinite(value)) throw parse_error(path, lineno, "non-finite value");
      row.push_back(value);
      p = next;
    }
    if (row.empty()) continue;  // blank line

    if (labeled) {
      const double label = row.back();
      if (label != std::floor(label))
        throw parse_error(path, lineno, "trailing label column is not an integer");
      row.pop_back();
      if (row.empty()) throw parse_error(path, lineno, "row holds only a label");
    }
    if (table.rows == 0) {
      table.cols = row.size();
    } else if (row.size() != table.cols) {
      std::ostringstream msg;
      msg << "expected " << table.cols << " columns, found " << row.size();
      throw parse_error(path, lineno, msg.str());
    }
    table.values.insert(table.values.end(), row.begin(), row.end());
    ++table.rows;
  }
  if (table.rows == 0) throw parse_error(path, 0, "file holds no data lines");
  return table;
}

void write_rows(const double* values, std::size_t rows, std::size_t cols,
                const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  char buffer[64];
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", values[r * cols + c]);
      if (c) out << ' ';
      out << buffer;
    }
    out << '\n';
  }
  if (!out) throw io_error("failed writing " + path);
}

}  // namespace

Dataset load_points(const std::string& path, bool labeled) {
  ParsedTable table = parse_table(path, labeled);
  return Dataset(std::move(table.values), table.cols);
}

CenterSet load_truth(const std::string& path, bool labeled) {
  ParsedTable table = parse_table(path, labeled);
  return CenterSet(std::move(table.values), table.cols);
}

void save_points(const Dataset& data, const std::string& path) {
  write_rows(data.values().data(), data.size(), data.dim(), path);
}

void save_centers(const CenterSet& centers, const std::string& path) {
  write_rows(centers.values.data(), centers.k, centers.d, path);
}

}  // namespace ffkm
