#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ffkm/types.hpp"

namespace ffkm {

struct LabeledDataset {
  Dataset data;
  std::vector<int> labels;  // generating component of each point
};

/// Mixture of uniform distributions on radius-r balls with equal weights.
struct BallMixture {
  CenterSet centers;
  double radius = 1.0;
};

/// Isotropic Gaussian per center, equal weights. Kept distinct from the ball
/// model: its support is unbounded.
struct GaussianMixture {
  CenterSet centers;
  double sigma = 1.0;
};

/// Each point picks a component uniformly, then samples uniformly inside the
/// component's ball (Gaussian direction scaled by U^(1/d) times the radius).
LabeledDataset sample_ball_mixture(const BallMixture& model, std::size_t n,
                                   std::uint64_t seed);

/// Exact per-component counts; counts.size() must equal the center count.
LabeledDataset sample_ball_mixture_sized(const BallMixture& model,
                                         const std::vector<std::size_t>& counts,
                                         std::uint64_t seed);

LabeledDataset sample_gaussian_mixture(const GaussianMixture& model, std::size_t n,
                                       std::uint64_t seed);

LabeledDataset sample_gaussian_mixture_sized(const GaussianMixture& model,
                                             const std::vector<std::size_t>& counts,
                                             std::uint64_t seed);

/// (min, max) pairwise distance over all unordered center pairs.
std::pair<double, double> separation_stats(const CenterSet& centers);

/// One-dimensional unit-radius ball mixture whose inner centers sit in the two
/// windows [c*delta - delta, c*delta + delta] and the mirrored one, with at
/// least one center in each, and whose remaining centers lie strictly outside
/// [-20*c*delta, 20*c*delta]. Requires c > 20 and delta > 3.
struct DiffuseModel {
  double c = 25.0;
  double delta = 4.0;
  std::vector<double> inner;
  std::vector<double> outer;

  void validate() const;  // throws invalid_input when any condition fails
  std::size_t inner_count() const { return inner.size(); }
  std::size_t total_count() const { return inner.size() + outer.size(); }
  std::vector<double> all_centers() const;
};

Dataset sample_diffuse(const DiffuseModel& model, std::size_t n, std::uint64_t seed);

struct TrapReport {
  bool trapped = false;                    // window counts constant throughout
  std::vector<std::array<int, 3>> counts;  // (k1, k2, k3) per step, t = 0 first
};

/// Runs `iters` plain Lloyd steps from `init` on the sampled dataset and
/// counts the centers inside the right window, the left window, and outside
/// the central interval at every step. Trapped means the first two counts
/// never change.
TrapReport check_trap(const DiffuseModel& model, const CenterSet& init, int iters,
                      const Dataset& data);

}  // namespace ffkm
