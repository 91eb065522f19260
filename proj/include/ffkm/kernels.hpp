#pragma once

#include "ffkm/types.hpp"

namespace ffkm::kernel {

// Work threshold (points * centers * dims) below which the loops run serially.
inline constexpr std::size_t parallel_grain = std::size_t{1} << 14;

/// labels[t] = index of the nearest center, lowest index on ties; dist2[t]
/// optionally receives the squared distance. Every point is independent, so
/// the result is identical for any thread count.
void assign_nearest(const Dataset& data, const CenterSet& centers, int* labels,
                    double* dist2 = nullptr);

/// Like assign_nearest but also records the squared distance to the
/// second-nearest center (infinity when k == 1).
void assign_nearest2(const Dataset& data, const CenterSet& centers, int* labels,
                     double* best2, double* second2);

/// Mean of each cluster; empty clusters keep the previous center. Members are
/// accumulated per cluster in ascending point order, so sums do not depend on
/// the thread count.
CenterSet cluster_means(const Dataset& data, const Assignment& assignment,
                        const CenterSet& previous);

/// Serial sum in index order. Reductions go through this so that objective
/// values stay bit-identical across thread counts.
double sum_ordered(const double* v, std::size_t n);

}  // namespace ffkm::kernel
