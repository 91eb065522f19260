#include "ffkm/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ffkm/kernels.hpp"

namespace ffkm {

namespace {

void require_consistent(const Dataset& data, const LocalSolution& solution) {
  if (solution.centers.d != data.dim())
    throw invalid_input("dimension mismatch between dataset and solution");
  if (solution.assignment.labels.size() != data.size())
    throw invalid_input("solution assignment does not cover the dataset");
}

void require_no_empty_cluster(const LocalSolution& solution) {
  if (solution.any_empty())
    throw degenerate_solution("detection requires every cluster to be non-empty");
}

// Sum of squared member distances to the cluster center, per cluster.
std::vector<double> per_cluster_sq_sum(const Dataset& data, const LocalSolution& solution) {
  const std::size_t k = solution.k();
  const std::size_t d = data.dim();
  std::vector<double> sums(k, 0.0);
  const auto kk = static_cast<std::ptrdiff_t>(k);
  const bool par = data.size() * d >= kernel::parallel_grain;
#pragma omp parallel for schedule(dynamic) if (par)
  for (std::ptrdiff_t i = 0; i < kk; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const double* center = solution.centers[ui];
    double s = 0.0;
    for (const int t : solution.assignment.clusters[ui])
      s += squared_distance(data[static_cast<std::size_t>(t)], center, d);
    sums[ui] = s;
  }
  return sums;
}

int argmax_lowest(const std::vector<double>& v) {
  int best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = static_cast<int>(i);
  return best;
}

int argmin_lowest(const std::vector<double>& v) {
  int best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = static_cast<int>(i);
  return best;
}

}  // namespace

OfmResult detect_ofm_sd(const Dataset& data, const LocalSolution& solution) {
  require_consistent(data, solution);
  require_no_empty_cluster(solution);
  OfmResult result;
  result.score = per_cluster_sq_sum(data, solution);
  for (std::size_t i = 0; i < result.score.size(); ++i)
    result.score[i] /= static_cast<double>(solution.assignment.cluster_size(i));
  result.index = argmax_lowest(result.score);
  return result;
}

OfmResult detect_ofm_td(const Dataset& data, const LocalSolution& solution) {
  require_consistent(data, solution);
  require_no_empty_cluster(solution);
  OfmResult result;
  result.score = per_cluster_sq_sum(data, solution);
  result.index = argmax_lowest(result.score);
  return result;
}

OfmResult detect_ofm_radius(const Dataset& data, const LocalSolution& solution,
                            double delta) {
  require_consistent(data, solution);
  require_no_empty_cluster(solution);
  if (!(delta > 0.0)) throw invalid_input("delta must be positive");

  const std::size_t k = solution.k();
  const std::size_t d = data.dim();

  // Adaptive base radius: the smallest per-cluster median member distance.
  double base = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> dists(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double* center = solution.centers[i];
    auto& di = dists[i];
    di.reserve(solution.assignment.cluster_size(i));
    for (const int t : solution.assignment.clusters[i])
      di.push_back(std::sqrt(squared_distance(data[static_cast<std::size_t>(t)], center, d)));
    std::sort(di.begin(), di.end());
    const std::size_t m = di.size();
    const double median = (m % 2 == 1) ? di[m / 2] : 0.5 * (di[m / 2 - 1] + di[m / 2]);
    base = std::min(base, median);
  }

  const double eps = delta * base;
  OfmResult result;
  result.score.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t inside = 0;
    for (const double dist : dists[i])
      if (dist <= eps) ++inside;
    result.score[i] = static_cast<double>(inside) / static_cast<double>(dists[i].size());
  }
  result.index = argmin_lowest(result.score);
  return result;
}

PdResult detect_mfo_pd(const CenterSet& centers, std::optional<int> exclude) {
  const std::size_t k = centers.k;
  const std::size_t candidates = k - (exclude.has_value() ? 1 : 0);
  if (candidates < 2) throw invalid_input("pairwise detection needs at least two centers");

  PdResult result;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (exclude && static_cast<int>(i) == *exclude) continue;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (exclude && static_cast<int>(j) == *exclude) continue;
      const double dist = squared_distance(centers[i], centers[j], centers.d);
      if (dist < best) {
        best = dist;
        result.i = static_cast<int>(i);
        result.j = static_cast<int>(j);
      }
    }
  }
  result.distance = std::sqrt(best);
  return result;
}

OiResult detect_mfo_oi(const Dataset& data, const LocalSolution& solution,
                       std::optional<int> exclude) {
  require_consistent(data, solution);
  const std::size_t k = solution.k();
  const std::size_t candidates = k - (exclude.has_value() ? 1 : 0);
  if (candidates < 2) throw invalid_input("removal detection needs at least two centers");

  const std::size_t n = data.size();
  std::vector<int> labels(n);
  std::vector<double> nearest(n);
  std::vector<double> second(n);
  kernel::assign_nearest2(data, solution.centers, labels.data(), nearest.data(),
                          second.data());

  // Removing center i only reassigns its own points, each to its
  // second-nearest center.
  const double total = kernel::sum_ordered(nearest.data(), n);
  OiResult result;
  result.removal_objective.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    double own = 0.0;
    double fallback = 0.0;
    for (const int t : solution.assignment.clusters[i]) {
      own += nearest[static_cast<std::size_t>(t)];
      fallback += second[static_cast<std::size_t>(t)];
    }
    result.removal_objective[i] = (total - own + fallback) / static_cast<double>(n);
  }

  int removed = -1;
  for (std::size_t i = 0; i < k; ++i) {
    if (exclude && static_cast<int>(i) == *exclude) continue;
    if (removed < 0 ||
        result.removal_objective[i] < result.removal_objective[static_cast<std::size_t>(removed)])
      removed = static_cast<int>(i);
  }
  result.removed = removed;

  int nearest_center = -1;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < k; ++j) {
    if (static_cast<int>(j) == removed) continue;
    if (exclude && static_cast<int>(j) == *exclude) continue;
    const double dist = squared_distance(solution.centers[j],
                                         solution.centers[static_cast<std::size_t>(removed)],
                                         solution.centers.d);
    if (dist < best) {
      best = dist;
      nearest_center = static_cast<int>(j);
    }
  }
  result.nearest = nearest_center;
  return result;
}

int detect_ofm(OfmKind kind, const Dataset& data, const LocalSolution& solution,
               double rd_delta) {
  switch (kind) {
    case OfmKind::sd: return detect_ofm_sd(data, solution).index;
    case OfmKind::td: return detect_ofm_td(data, solution).index;
    case OfmKind::rd: return detect_ofm_radius(data, solution, rd_delta).index;
  }
  throw invalid_input("unknown one-fit-many detector");
}

std::pair<int, int> detect_mfo(MfoKind kind, const Dataset& data,
                               const LocalSolution& solution, std::optional<int> exclude) {
  switch (kind) {
    case MfoKind::pd: {
      const PdResult r = detect_mfo_pd(solution.centers, exclude);
      return {r.i, r.j};
    }
    case MfoKind::oi: {
      const OiResult r = detect_mfo_oi(data, solution, exclude);
      return {r.removed, r.nearest};
    }
  }
  throw invalid_input("unknown many-fit-one detector");
}

const char* to_string(OfmKind kind) {
  switch (kind) {
    case OfmKind::sd: return "sd";
    case OfmKind::td: return "td";
    case OfmKind::rd: return "rd";
  }
  return "?";
}

const char* to_string(MfoKind kind) {
  switch (kind) {
    case MfoKind::pd: return "pd";
    case MfoKind::oi: return "oi";
  }
  return "?";
}

OfmKind ofm_from_string(const std::string& name) {
  if (name == "sd") return OfmKind::sd;
  if (name == "td") return OfmKind::td;
  if (name == "rd") return OfmKind::rd;
  throw invalid_input("unknown one-fit-many detector: " + name);
}

MfoKind mfo_from_string(const std::string& name) {
  if (name == "pd") return MfoKind::pd;
  if (name == "oi") return MfoKind::oi;
  throw invalid_input("unknown many-fit-one detector: " + name);
}

}  // namespace ffkm
