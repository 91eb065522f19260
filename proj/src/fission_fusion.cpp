#include "ffkm/fission_fusion.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <utility>

#include "ffkm/kernels.hpp"

namespace ffkm {

namespace {

int farthest_member(const Dataset& data, const LocalSolution& solution, int index) {
  const double* center = solution.centers[static_cast<std::size_t>(index)];
  const std::size_t d = data.dim();
  int best_point = -1;
  double best = -1.0;
  for (const int t : solution.assignment.clusters[static_cast<std::size_t>(index)]) {
    const double dist = squared_distance(data[static_cast<std::size_t>(t)], center, d);
    if (dist > best) {
      best = dist;
      best_point = t;
    }
  }
  return best_point;
}

// Relocates empty centers into the most spread-out populated cluster until
// every cluster is non-empty, re-running Lloyd after each move. Throws when
// the solution cannot be repaired (k > n, or the moves stop helping).
void ensure_no_empty_cluster(const Dataset& data, LocalSolution& solution,
                             const LloydOptions& options) {
  const std::size_t k = solution.k();
  for (std::size_t round = 0; solution.any_empty(); ++round) {
    if (k > data.size() || round > k)
      throw degenerate_solution("cannot repair a solution with empty clusters");

    std::size_t empty = 0;
    while (!solution.assignment.clusters[empty].empty()) ++empty;

    // Most spread-out populated cluster by mean squared member distance.
    int target = -1;
    double best = -1.0;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t size = solution.assignment.cluster_size(i);
      if (size == 0) continue;
      double s = 0.0;
      for (const int t : solution.assignment.clusters[i])
        s += squared_distance(data[static_cast<std::size_t>(t)], solution.centers[i],
                              data.dim());
      s /= static_cast<double>(size);
      if (s > best) {
        best = s;
        target = static_cast<int>(i);
      }
    }

    const int point = farthest_member(data, solution, target);
    CenterSet centers = solution.centers;
    double* moved = centers[empty];
    const double* x = data[static_cast<std::size_t>(point)];
    std::copy(x, x + data.dim(), moved);
    solution = lloyd(data, centers, options);
  }
}

}  // namespace

CenterSet split_center(const Dataset& data, const LocalSolution& solution, int index,
                       SplitMethod method, std::uint64_t seed,
                       const LloydOptions& lloyd_options) {
  if (index < 0 || static_cast<std::size_t>(index) >= solution.k())
    throw invalid_input("split index out of range");
  const auto& members = solution.assignment.clusters[static_cast<std::size_t>(index)];
  if (members.empty()) throw degenerate_solution("cannot split an empty cluster");

  const std::size_t d = data.dim();
  CenterSet out = solution.centers;

  if (method == SplitMethod::local_2means && members.size() >= 2) {
    std::vector<double> sub;
    sub.reserve(members.size() * d);
    for (const int t : members) {
      const double* x = data[static_cast<std::size_t>(t)];
      sub.insert(sub.end(), x, x + d);
    }
    const Dataset local(std::move(sub), d);
    const LocalSolution two = lloyd(local, init_kmeanspp(local, 2, seed), lloyd_options);
    std::copy(two.centers[0], two.centers[0] + d, out[static_cast<std::size_t>(index)]);
    out.values.insert(out.values.end(), two.centers[1], two.centers[1] + d);
  } else {
    // Keep the old center and add the member farthest from it.
    const int point = farthest_member(data, solution, index);
    const double* x = data[static_cast<std::size_t>(point)];
    out.values.insert(out.values.end(), x, x + d);
  }
  out.k += 1;
  return out;
}

CenterSet merge_centers(const CenterSet& centers, int i, int j) {
  if (i == j) throw invalid_input("cannot merge a center with itself");
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= centers.k ||
      static_cast<std::size_t>(j) >= centers.k)
    throw invalid_input("merge index out of range");

  const std::size_t d = centers.d;
  std::vector<double> values;
  values.reserve((centers.k - 1) * d);
  for (std::size_t c = 0; c < centers.k; ++c) {
    if (c == static_cast<std::size_t>(i) || c == static_cast<std::size_t>(j)) continue;
    values.insert(values.end(), centers[c], centers[c] + d);
  }
  for (std::size_t c = 0; c < d; ++c)
    values.push_back(0.5 * (centers[static_cast<std::size_t>(i)][c] +
                            centers[static_cast<std::size_t>(j)][c]));
  return CenterSet(std::move(values), d);
}

FfkmResult fission_fusion(const Dataset& data, const CenterSet& init,
                          const FfkmConfig& config) {
  if (config.max_outer < 1) throw invalid_input("max_outer must be at least 1");
  std::mt19937_64 rng(config.seed);

  LocalSolution solution = lloyd(data, init, config.lloyd);
  ensure_no_empty_cluster(data, solution, config.lloyd);

  FfkmResult result;
  result.trace.reason = FfkmStop::iteration_cap;
  const std::size_t k = init.k;

  for (int outer = 1; outer <= config.max_outer; ++outer) {
    // A merge pair disjoint from the split center needs at least two other
    // centers, so below k = 3 no move exists and the objective cannot improve.
    if (k < 3) {
      result.trace.reason = FfkmStop::non_improvement;
      break;
    }

    const int split_index = detect_ofm(config.ofm, data, solution, config.rd_delta);
    const std::uint64_t split_seed = rng();
    const CenterSet widened =
        split_center(data, solution, split_index, config.split, split_seed, config.lloyd);
    const auto [mi, mj] = detect_mfo(config.mfo, data, solution, split_index);
    const CenterSet proposal = merge_centers(widened, mi, mj);

    LocalSolution next = lloyd(data, proposal, config.lloyd);
    ensure_no_empty_cluster(data, next, config.lloyd);

    result.trace.iterations.push_back({solution.objective, split_index, mi, mj,
                                       static_cast<int>(widened.k), next.objective});

    if (next.objective >= solution.objective) {
      result.trace.reason = FfkmStop::non_improvement;
      break;
    }
    solution = std::move(next);
  }

  result.solution = std::move(solution);
  return result;
}

LocalSolution over_parameterized(const Dataset& data, std::size_t k_init,
                                 std::size_t k_star, MfoKind mfo, std::uint64_t seed,
                                 const LloydOptions& lloyd_options) {
  if (k_star == 0) throw invalid_input("k_star must be positive");
  if (k_init < k_star) throw invalid_input("k_init must not be below k_star");

  LocalSolution solution = lloyd(data, init_random(data, k_init, seed), lloyd_options);
  while (solution.k() > k_star) {
    const auto [i, j] = detect_mfo(mfo, data, solution);
    solution = lloyd(data, merge_centers(solution.centers, i, j), lloyd_options);
  }
  return solution;
}

LocalSolution under_parameterized(const Dataset& data, std::size_t k_init,
                                  std::size_t k_star, OfmKind ofm, double rd_delta,
                                  SplitMethod split, std::uint64_t seed,
                                  const LloydOptions& lloyd_options) {
  if (k_init == 0) throw invalid_input("k_init must be positive");
  if (k_init > k_star) throw invalid_input("k_init must not exceed k_star");
  if (k_star > data.size()) throw invalid_input("k_star cannot exceed the point count");

  std::mt19937_64 rng(seed);
  LocalSolution solution = lloyd(data, init_random(data, k_init, rng()), lloyd_options);
  while (solution.k() < k_star) {
    ensure_no_empty_cluster(data, solution, lloyd_options);
    const int index = detect_ofm(ofm, data, solution, rd_delta);
    const CenterSet widened =
        split_center(data, solution, index, split, rng(), lloyd_options);
    solution = lloyd(data, widened, lloyd_options);
  }
  ensure_no_empty_cluster(data, solution, lloyd_options);
  return solution;
}

const char* to_string(SplitMethod method) {
  switch (method) {
    case SplitMethod::farthest_point: return "farthest_point";
    case SplitMethod::local_2means: return "local_2means";
  }
  return "?";
}

SplitMethod split_from_string(const std::string& name) {
  if (name == "farthest_point") return SplitMethod::farthest_point;
  if (name == "local_2means") return SplitMethod::local_2means;
  throw invalid_input("unknown split method: " + name);
}

}  // namespace ffkm
