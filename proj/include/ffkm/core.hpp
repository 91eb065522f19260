#pragma once

#include <cstdint>

#include "ffkm/types.hpp"

namespace ffkm {

struct LloydOptions {
  int max_iter = 300;
  double tol = 1e-10;       // relative objective decrease below which we stop
  std::size_t min_pts = 1;  // clusters with fewer points are flagged degenerate
};

/// Mean squared distance to the nearest center: (1/n) * sum_t min_j ||x_t - b_j||^2.
double objective(const Dataset& data, const CenterSet& centers);

/// Voronoi assignment of every point to its nearest center (ties to the
/// lowest center index).
Assignment assign(const Dataset& data, const CenterSet& centers);

/// Center i becomes the mean of its cluster; empty clusters keep the
/// previous center.
CenterSet update_centers(const Dataset& data, const Assignment& assignment,
                         const CenterSet& previous);

/// Alternates assign/update until the labels stop changing, the relative
/// objective decrease falls below tol, or max_iter is reached. The objective
/// sequence is non-increasing.
LocalSolution lloyd(const Dataset& data, const CenterSet& init,
                    const LloydOptions& options = {});

/// k distinct data points chosen uniformly without replacement.
CenterSet init_random(const Dataset& data, std::size_t k, std::uint64_t seed);

/// First center uniform from the data; each later center sampled with
/// probability proportional to the squared distance to the nearest chosen one.
CenterSet init_kmeanspp(const Dataset& data, std::size_t k, std::uint64_t seed);

}  // namespace ffkm
