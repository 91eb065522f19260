#include "ffkm/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <utility>

#include "ffkm/kernels.hpp"

namespace ffkm {

Dataset::Dataset(std::vector<double> values, std::size_t dim) : values_(std::move(values)) {
  if (dim == 0) throw invalid_input("dimension must be positive");
  if (values_.empty()) throw invalid_input("dataset must contain at least one point");
  if (values_.size() % dim != 0)
    throw invalid_input("flat value count is not a multiple of the dimension");
  for (const double v : values_)
    if (!std::isfinite(v)) throw invalid_input("dataset coordinates must be finite");
  d_ = dim;
  n_ = values_.size() / dim;
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw invalid_input("dataset must contain at least one point");
  const std::size_t d = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * d);
  for (const auto& row : rows) {
    if (row.size() != d) throw invalid_input("all points must share one dimension");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Dataset(std::move(flat), d);
}

CenterSet::CenterSet(std::vector<double> vals, std::size_t dim) : values(std::move(vals)) {
  if (dim == 0) throw invalid_input("dimension must be positive");
  if (values.empty()) throw invalid_input("center set must contain at least one center");
  if (values.size() % dim != 0)
    throw invalid_input("flat value count is not a multiple of the dimension");
  for (const double v : values)
    if (!std::isfinite(v)) throw invalid_input("center coordinates must be finite");
  d = dim;
  k = values.size() / dim;
}

CenterSet CenterSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw invalid_input("center set must contain at least one center");
  const std::size_t d = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * d);
  for (const auto& row : rows) {
    if (row.size() != d) throw invalid_input("all centers must share one dimension");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return CenterSet(std::move(flat), d);
}

Assignment group_by_label(std::vector<int> labels, std::size_t k) {
  Assignment a;
  a.clusters.assign(k, {});
  for (std::size_t t = 0; t < labels.size(); ++t) {
    const int label = labels[t];
    if (label < 0 || static_cast<std::size_t>(label) >= k)
      throw invalid_input("label out of range");
    a.clusters[static_cast<std::size_t>(label)].push_back(static_cast<int>(t));
  }
  a.labels = std::move(labels);
  return a;
}

double objective(const Dataset& data, const CenterSet& centers) {
  std::vector<int> labels(data.size());
  std::vector<double> dist2(data.size());
  kernel::assign_nearest(data, centers, labels.data(), dist2.data());
  return kernel::sum_ordered(dist2.data(), dist2.size()) /
         static_cast<double>(data.size());
}

Assignment assign(const Dataset& data, const CenterSet& centers) {
  std::vector<int> labels(data.size());
  kernel::assign_nearest(data, centers, labels.data());
  return group_by_label(std::move(labels), centers.k);
}

CenterSet update_centers(const Dataset& data, const Assignment& assignment,
                         const CenterSet& previous) {
  if (assignment.labels.size() != data.size())
    throw invalid_input("assignment does not cover the dataset");
  return kernel::cluster_means(data, assignment, previous);
}

LocalSolution lloyd(const Dataset& data, const CenterSet& init, const LloydOptions& options) {
  if (options.max_iter < 1) throw invalid_input("max_iter must be at least 1");
  if (!(options.tol >= 0.0)) throw invalid_input("tol must be nonnegative");
  if (init.d != data.dim())
    throw invalid_input("dimension mismatch between dataset and centers");

  const std::size_t n = data.size();
  const std::size_t k = init.k;
  CenterSet centers = init;
  std::vector<int> labels(n);
  std::vector<int> previous_labels(n);
  std::vector<double> dist2(n);

  kernel::assign_nearest(data, centers, labels.data(), dist2.data());
  double obj = kernel::sum_ordered(dist2.data(), n) / static_cast<double>(n);
  Assignment assignment = group_by_label(labels, k);

  int iter = 0;
  while (iter < options.max_iter) {
    ++iter;
    CenterSet updated = kernel::cluster_means(data, assignment, centers);
    previous_labels = labels;
    kernel::assign_nearest(data, updated, labels.data(), dist2.data());
    const double next_obj = kernel::sum_ordered(dist2.data(), n) / static_cast<double>(n);
    const bool moved = labels != previous_labels;
    const double decrease = obj > 0.0 ? (obj - next_obj) / obj : 0.0;
    centers = std::move(updated);
    assignment = group_by_label(labels, k);
    obj = next_obj;
    if (!moved || decrease < options.tol) break;
  }

  LocalSolution solution;
  solution.centers = std::move(centers);
  solution.objective = obj;
  solution.iterations = iter;
  solution.degenerate.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    solution.degenerate[i] = assignment.cluster_size(i) < options.min_pts ? 1 : 0;
  solution.assignment = std::move(assignment);
  return solution;
}

CenterSet init_random(const Dataset& data, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw invalid_input("k must be positive");
  if (k > data.size()) throw invalid_input("cannot draw more centers than points");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> index(data.size());
  std::iota(index.begin(), index.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, index.size() - 1);
    std::swap(index[i], index[pick(rng)]);
  }
  std::vector<double> values;
  values.reserve(k * data.dim());
  for (std::size_t i = 0; i < k; ++i) {
    const double* x = data[index[i]];
    values.insert(values.end(), x, x + data.dim());
  }
  return CenterSet(std::move(values), data.dim());
}

CenterSet init_kmeanspp(const Dataset& data, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw invalid_input("k must be positive");
  if (k > data.size()) throw invalid_input("cannot draw more centers than points");
  const std::size_t n = data.size();
  const std::size_t d = data.dim();
  std::mt19937_64 rng(seed);

  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<char> chosen(n, 0);
  std::vector<double> values;
  values.reserve(k * d);

  const auto add_center = [&](std::size_t p) {
    chosen[p] = 1;
    const double* c = data[p];
    values.insert(values.end(), c, c + d);
    const auto count = static_cast<std::ptrdiff_t>(n);
    const bool par = n * d >= kernel::parallel_grain;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const double dt = squared_distance(data[static_cast<std::size_t>(t)], c, d);
      if (dt < best[t]) best[t] = dt;
    }
  };

  std::uniform_int_distribution<std::size_t> first(0, n - 1);
  add_center(first(rng));

  for (std::size_t j = 1; j < k; ++j) {
    const double total = kernel::sum_ordered(best.data(), n);
    std::size_t next = n;
    if (total > 0.0) {
      std::uniform_real_distribution<double> u(0.0, total);
      const double r = u(rng);
      double cum = 0.0;
      for (std::size_t t = 0; t < n; ++t) {
        cum += best[t];
        if (r < cum) {
          next = t;
          break;
        }
      }
      if (next == n) {  // rounding tail: last point with positive mass
        for (std::size_t t = n; t-- > 0;) {
          if (best[t] > 0.0) {
            next = t;
            break;
          }
        }
      }
    }
    if (next == n) {  // all remaining mass zero: lowest unchosen index
      for (std::size_t t = 0; t < n; ++t) {
        if (!chosen[t]) {
          next = t;
          break;
        }
      }
    }
    add_center(next);
  }
  return CenterSet(std::move(values), d);
}

}  // namespace ffkm
