#pragma once

#include <stdexcept>
#include <string>

#include "ffkm/types.hpp"

namespace ffkm {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& path, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Whitespace-delimited point file: one point per line, finite numeric
/// tokens, constant column count, blank lines skipped. With labeled = true
/// the trailing integer label column is dropped.
Dataset load_points(const std::string& path, bool labeled = false);

/// Same format, interpreted as k* ground-truth centers.
CenterSet load_truth(const std::string& path, bool labeled = false);

/// Writes coordinates with enough digits to round-trip exactly.
void save_points(const Dataset& data, const std::string& path);
void save_centers(const CenterSet& centers, const std::string& path);

}  // namespace ffkm
