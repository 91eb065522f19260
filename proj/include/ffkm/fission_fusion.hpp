#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffkm/core.hpp"
#include "ffkm/detect.hpp"

namespace ffkm {

enum class SplitMethod { farthest_point, local_2means };

struct FfkmConfig {
  OfmKind ofm = OfmKind::sd;
  double rd_delta = 0.1;
  MfoKind mfo = MfoKind::pd;
  SplitMethod split = SplitMethod::farthest_point;
  int max_outer = 100;
  LloydOptions lloyd;
  std::uint64_t seed = 0;  // consumed by local_2means splits
};

struct FfkmIteration {
  double objective_before = 0.0;  // objective entering the iteration
  int split_index = -1;
  int merged_i = -1;
  int merged_j = -1;
  int k_half_step = 0;            // center count right after the split
  double objective_after = 0.0;   // objective after the closing Lloyd run
};

enum class FfkmStop { non_improvement, iteration_cap };

struct FfkmTrace {
  std::vector<FfkmIteration> iterations;
  FfkmStop reason = FfkmStop::non_improvement;
};

struct FfkmResult {
  LocalSolution solution;
  FfkmTrace trace;
};

/// Splits cluster `index` of a solution into two centers and returns the
/// widened (k+1)-center set. farthest_point keeps the old center and adds the
/// member farthest from it (lowest point index on ties); local_2means replaces
/// the center with the two centers of a seeded 2-means run on the cluster.
CenterSet split_center(const Dataset& data, const LocalSolution& solution, int index,
                       SplitMethod method, std::uint64_t seed,
                       const LloydOptions& lloyd_options = {});

/// Removes centers i and j and appends their mean; returns k-1 centers.
CenterSet merge_centers(const CenterSet& centers, int i, int j);

/// Fission-fusion k-means: run Lloyd, then repeatedly split the detected
/// one-fit-many cluster, merge the detected many-fit-one pair (disjoint from
/// the split), and re-run Lloyd, until the objective stops improving or the
/// iteration cap is hit. The center count is restored at the end of every
/// outer iteration.
FfkmResult fission_fusion(const Dataset& data, const CenterSet& init,
                          const FfkmConfig& config);

/// Start with k_init > k_star centers, then merge detected many-fit-one pairs
/// (re-running Lloyd each time) until exactly k_star centers remain.
LocalSolution over_parameterized(const Dataset& data, std::size_t k_init,
                                 std::size_t k_star, MfoKind mfo, std::uint64_t seed,
                                 const LloydOptions& lloyd_options = {});

/// Start with k_init < k_star centers, then split detected one-fit-many
/// clusters (re-running Lloyd each time) until exactly k_star centers exist.
LocalSolution under_parameterized(const Dataset& data, std::size_t k_init,
                                  std::size_t k_star, OfmKind ofm, double rd_delta,
                                  SplitMethod split, std::uint64_t seed,
                                  const LloydOptions& lloyd_options = {});

const char* to_string(SplitMethod method);
SplitMethod split_from_string(const std::string& name);

}  // namespace ffkm
