#include "ffkm/kernels.hpp"

#include <limits>
#include <vector>

namespace ffkm::kernel {

namespace {

void check_pair(const Dataset& data, const CenterSet& centers) {
  if (centers.k == 0) throw invalid_input("center set is empty");
  if (centers.d != data.dim())
    throw invalid_input("dimension mismatch between dataset and centers");
}

}  // namespace

void assign_nearest(const Dataset& data, const CenterSet& centers, int* labels,
                    double* dist2) {
  check_pair(data, centers);
  const auto n = static_cast<std::ptrdiff_t>(data.size());
  const std::size_t k = centers.k;
  const std::size_t d = centers.d;
  const bool par = data.size() * k * d >= parallel_grain;
#pragma omp parallel for schedule(static) if (par)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    const double* x = data[static_cast<std::size_t>(t)];
    int best = 0;
    double bd = squared_distance(x, centers[0], d);
    for (std::size_t j = 1; j < k; ++j) {
      const double dj = squared_distance(x, centers[j], d);
      if (dj < bd) {
        bd = dj;
        best = static_cast<int>(j);
      }
    }
    labels[t] = best;
    if (dist2 != nullptr) dist2[t] = bd;
  }
}

void assign_nearest2(const Dataset& data, const CenterSet& centers, int* labels,
                     double* best2, double* second2) {
  check_pair(data, centers);
  const auto n = static_cast<std::ptrdiff_t>(data.size());
  const std::size_t k = centers.k;
  const std::size_t d = centers.d;
  const bool par = data.size() * k * d >= parallel_grain;
#pragma omp parallel for schedule(static) if (par)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    const double* x = data[static_cast<std::size_t>(t)];
    int best = 0;
    double bd = squared_distance(x, centers[0], d);
    double sd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < k; ++j) {
      const double dj = squared_distance(x, centers[j], d);
      if (dj < bd) {
        sd = bd;
        bd = dj;
        best = static_cast<int>(j);
      } else if (dj < sd) {
        sd = dj;
      }
    }
    labels[t] = best;
    best2[t] = bd;
    second2[t] = sd;
  }
}

CenterSet cluster_means(const Dataset& data, const Assignment& assignment,
                        const CenterSet& previous) {
  check_pair(data, previous);
  if (assignment.k() != previous.k)
    throw invalid_input("assignment does not match the center count");

  CenterSet out = previous;  // empty clusters keep their previous center
  const auto k = static_cast<std::ptrdiff_t>(previous.k);
  const std::size_t d = previous.d;
  const bool par = data.size() * d >= parallel_grain;
#pragma omp parallel for schedule(dynamic) if (par)
  for (std::ptrdiff_t i = 0; i < k; ++i) {
    const auto& members = assignment.clusters[static_cast<std::size_t>(i)];
    if (members.empty()) continue;
    std::vector<double> acc(d, 0.0);
    for (const int t : members) {
      const double* x = data[static_cast<std::size_t>(t)];
      for (std::size_t c = 0; c < d; ++c) acc[c] += x[c];
    }
    double* target = out[static_cast<std::size_t>(i)];
    const auto count = static_cast<double>(members.size());
    for (std::size_t c = 0; c < d; ++c) target[c] = acc[c] / count;
  }
  return out;
}

double sum_ordered(const double* v, std::size_t n) {
  double s = 0.0;
  for (std::size_t t = 0; t < n; ++t) s += v[t];
  return s;
}

}  // namespace ffkm::kernel
