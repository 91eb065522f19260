#pragma once

#include <span>

#include "ffkm/types.hpp"

namespace ffkm {

/// Maps every fitted center to its nearest true center (lowest index on ties)
/// and counts the true centers that receive no fitted center.
int centroid_index(const CenterSet& fitted, const CenterSet& truth);

/// Percentage of trials with CI == 0.
double success_rate(std::span<const int> cis);

/// Mean CI divided by the true cluster count.
double average_missing_rate(std::span<const int> cis, std::size_t k_star);

/// objective / reference. The reference must be positive.
double rho_ratio(double objective, double reference);

/// Sum of squared errors: n times the mean squared distance objective.
double sse(const Dataset& data, const CenterSet& centers);

}  // namespace ffkm
