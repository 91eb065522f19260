#include "ffkm/metrics.hpp"

#include <limits>

#include "ffkm/core.hpp"

namespace ffkm {

int centroid_index(const CenterSet& fitted, const CenterSet& truth) {
  if (fitted.d != truth.d)
    throw invalid_input("fitted and true centers must share a dimension");

  std::vector<char> mapped(truth.k, 0);
  for (std::size_t i = 0; i < fitted.k; ++i) {
    std::size_t nearest = 0;
    double best = squared_distance(fitted[i], truth[0], truth.d);
    for (std::size_t s = 1; s < truth.k; ++s) {
      const double dist = squared_distance(fitted[i], truth[s], truth.d);
      if (dist < best) {
        best = dist;
        nearest = s;
      }
    }
    mapped[nearest] = 1;
  }

  int missing = 0;
  for (const char m : mapped)
    if (!m) ++missing;
  return missing;
}

double success_rate(std::span<const int> cis) {
  if (cis.empty()) throw invalid_input("success rate needs at least one trial");
  std::size_t zero = 0;
  for (const int ci : cis)
    if (ci == 0) ++zero;
  return 100.0 * static_cast<double>(zero) / static_cast<double>(cis.size());
}

double average_missing_rate(std::span<const int> cis, std::size_t k_star) {
  if (cis.empty()) throw invalid_input("missing rate needs at least one trial");
  if (k_star == 0) throw invalid_input("k_star must be positive");
  double total = 0.0;
  for (const int ci : cis) total += ci;
  return total / static_cast<double>(cis.size()) / static_cast<double>(k_star);
}

double rho_ratio(double objective, double reference) {
  if (!(reference > 0.0)) throw invalid_input("reference objective must be positive");
  return objective / reference;
}

double sse(const Dataset& data, const CenterSet& centers) {
  return static_cast<double>(data.size()) * objective(data, centers);
}

}  // namespace ffkm
