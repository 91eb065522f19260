#include "ffkm/reference.hpp"

namespace ffkm::ref {

double objective(const Dataset& data, const CenterSet& centers) {
  if (centers.d != data.dim())
    throw invalid_input("dimension mismatch between dataset and centers");
  const std::size_t d = data.dim();
  double total = 0.0;
  for (std::size_t t = 0; t < data.size(); ++t) {
    const double* x = data[t];
    double best = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      const double diff = x[c] - centers[0][c];
      best += diff * diff;
    }
    for (std::size_t j = 1; j < centers.k; ++j) {
      double dist = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        const double diff = x[c] - centers[j][c];
        dist += diff * diff;
      }
      if (dist < best) best = dist;
    }
    total += best;
  }
  return total / static_cast<double>(data.size());
}

std::vector<int> assign(const Dataset& data, const CenterSet& centers) {
  if (centers.d != data.dim())
    throw invalid_input("dimension mismatch between dataset and centers");
  const std::size_t d = data.dim();
  std::vector<int> labels(data.size(), 0);
  for (std::size_t t = 0; t < data.size(); ++t) {
    const double* x = data[t];
    double best = squared_distance(x, centers[0], d);
    for (std::size_t j = 1; j < centers.k; ++j) {
      const double dist = squared_distance(x, centers[j], d);
      if (dist < best) {
        best = dist;
        labels[t] = static_cast<int>(j);
      }
    }
  }
  return labels;
}

CenterSet update_centers(const Dataset& data, const Assignment& assignment,
                         const CenterSet& previous) {
  CenterSet out = previous;
  const std::size_t d = previous.d;
  for (std::size_t i = 0; i < previous.k; ++i) {
    const auto& members = assignment.clusters[i];
    if (members.empty()) continue;
    std::vector<double> acc(d, 0.0);
    for (const int t : members)
      for (std::size_t c = 0; c < d; ++c) acc[c] += data[static_cast<std::size_t>(t)][c];
    for (std::size_t c = 0; c < d; ++c)
      out[i][c] = acc[c] / static_cast<double>(members.size());
  }
  return out;
}

}  // namespace ffkm::ref
