#pragma once

#include <random>
#include <vector>

#include "ffkm/types.hpp"

namespace testsupport {

// Random instance: n points of dimension d scattered uniformly in a box.
inline ffkm::Dataset random_dataset(std::size_t n, std::size_t d, std::uint64_t seed,
                                    double lo = -10.0, double hi = 10.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(lo, hi);
  std::vector<double> values(n * d);
  for (auto& v : values) v = coord(rng);
  return ffkm::Dataset(std::move(values), d);
}

inline ffkm::CenterSet random_centers(std::size_t k, std::size_t d, std::uint64_t seed,
                                      double lo = -10.0, double hi = 10.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(lo, hi);
  std::vector<double> values(k * d);
  for (auto& v : values) v = coord(rng);
  return ffkm::CenterSet(std::move(values), d);
}

}  // namespace testsupport
