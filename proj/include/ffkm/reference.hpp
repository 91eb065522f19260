#pragma once

#include "ffkm/types.hpp"

// Plain serial implementations of the inner loops. They are the oracles in
// the test suite and the baseline in the kernel benchmark, and must stay
// independent of the kernels in kernels.hpp.
namespace ffkm::ref {

/// Mean squared distance to the nearest center, naive double loop.
double objective(const Dataset& data, const CenterSet& centers);

/// Brute-force nearest-center labels, lowest index on ties.
std::vector<int> assign(const Dataset& data, const CenterSet& centers);

/// Per-cluster means; empty clusters keep the previous center.
CenterSet update_centers(const Dataset& data, const Assignment& assignment,
                         const CenterSet& previous);

}  // namespace ffkm::ref
