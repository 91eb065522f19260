#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffkm {

// Thrown when arguments violate an operation's preconditions.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an operation needs a solution without empty clusters and the
// requirement cannot be met or repaired.
class degenerate_solution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable n-by-d point collection, stored row-major.
class Dataset {
 public:
  Dataset(std::vector<double> values, std::size_t dim);

  static Dataset from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return d_; }

  const double* operator[](std::size_t t) const { return values_.data() + t * d_; }
  std::span<const double> point(std::size_t t) const { return {(*this)[t], d_}; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
  std::size_t n_ = 0;
  std::size_t d_ = 0;
};

/// Ordered list of k centers in R^d. A plain value type: split/merge
/// operations build new sets rather than mutating in place.
struct CenterSet {
  std::vector<double> values;
  std::size_t k = 0;
  std::size_t d = 0;

  CenterSet() = default;
  CenterSet(std::vector<double> vals, std::size_t dim);

  static CenterSet from_rows(const std::vector<std::vector<double>>& rows);

  double* operator[](std::size_t i) { return values.data() + i * d; }
  const double* operator[](std::size_t i) const { return values.data() + i * d; }
  std::span<const double> center(std::size_t i) const { return {(*this)[i], d}; }

  friend bool operator==(const CenterSet& a, const CenterSet& b) {
    return a.k == b.k && a.d == b.d && a.values == b.values;
  }
};

/// Per-point nearest-center labels plus the member list of every cluster.
/// The member lists are kept in ascending point order.
struct Assignment {
  std::vector<int> labels;
  std::vector<std::vector<int>> clusters;

  std::size_t k() const { return clusters.size(); }
  std::size_t cluster_size(std::size_t i) const { return clusters[i].size(); }
};

/// Groups point indices by label. Labels must lie in [0, k).
Assignment group_by_label(std::vector<int> labels, std::size_t k);

/// A converged Lloyd solution: centers, their Voronoi assignment, the mean
/// squared distance objective, and per-cluster degeneracy flags.
struct LocalSolution {
  CenterSet centers;
  Assignment assignment;
  double objective = 0.0;
  int iterations = 0;
  std::vector<std::uint8_t> degenerate;

  std::size_t k() const { return centers.k; }
  bool any_empty() const {
    for (const auto& c : assignment.clusters)
      if (c.empty()) return true;
    return false;
  }
};

inline double squared_distance(const double* a, const double* b, std::size_t d) {
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

}  // namespace ffkm
