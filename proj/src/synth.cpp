#include "ffkm/synth.hpp"

#include <cmath>
#include <random>

#include "ffkm/kernels.hpp"

namespace ffkm {

namespace {

// Uniform direction times U^(1/d)-scaled radius is uniform in the ball.
void sample_in_ball(std::mt19937_64& rng, std::normal_distribution<double>& gauss,
                    std::uniform_real_distribution<double>& unit, const double* center,
                    double radius, std::size_t d, double* out) {
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      out[c] = gauss(rng);
      norm2 += out[c] * out[c];
    }
  } while (norm2 == 0.0);
  const double scale =
      radius * std::pow(unit(rng), 1.0 / static_cast<double>(d)) / std::sqrt(norm2);
  for (std::size_t c = 0; c < d; ++c) out[c] = center[c] + out[c] * scale;
}

std::vector<int> component_sequence(std::size_t k, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  std::vector<int> labels(n);
  for (auto& l : labels) l = static_cast<int>(pick(rng));
  return labels;
}

std::vector<int> sized_sequence(const std::vector<std::size_t>& counts) {
  std::vector<int> labels;
  for (std::size_t s = 0; s < counts.size(); ++s)
    labels.insert(labels.end(), counts[s], static_cast<int>(s));
  return labels;
}

LabeledDataset sample_ball_labels(const BallMixture& model, std::vector<int> labels,
                                  std::uint64_t seed) {
  if (!(model.radius > 0.0)) throw invalid_input("ball radius must be positive");
  const std::size_t d = model.centers.d;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(labels.size() * d);
  for (std::size_t t = 0; t < labels.size(); ++t)
    sample_in_ball(rng, gauss, unit, model.centers[static_cast<std::size_t>(labels[t])],
                   model.radius, d, values.data() + t * d);
  return {Dataset(std::move(values), d), std::move(labels)};
}

LabeledDataset sample_gaussian_labels(const GaussianMixture& model,
                                      std::vector<int> labels, std::uint64_t seed) {
  if (!(model.sigma > 0.0)) throw invalid_input("sigma must be positive");
  const std::size_t d = model.centers.d;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> values(labels.size() * d);
  for (std::size_t t = 0; t < labels.size(); ++t) {
    const double* center = model.centers[static_cast<std::size_t>(labels[t])];
    double* out = values.data() + t * d;
    for (std::size_t c = 0; c < d; ++c) out[c] = center[c] + model.sigma * gauss(rng);
  }
  return {Dataset(std::move(values), d), std::move(labels)};
}

}  // namespace

LabeledDataset sample_ball_mixture(const BallMixture& model, std::size_t n,
                                   std::uint64_t seed) {
  if (n == 0) throw invalid_input("sample size must be positive");
  std::mt19937_64 rng(seed);
  auto labels = component_sequence(model.centers.k, n, rng);
  return sample_ball_labels(model, std::move(labels), rng());
}

LabeledDataset sample_ball_mixture_sized(const BallMixture& model,
                                         const std::vector<std::size_t>& counts,
                                         std::uint64_t seed) {
  if (counts.size() != model.centers.k)
    throw invalid_input("per-cluster count list must match the center count");
  return sample_ball_labels(model, sized_sequence(counts), seed);
}

LabeledDataset sample_gaussian_mixture(const GaussianMixture& model, std::size_t n,
                                       std::uint64_t seed) {
  if (n == 0) throw invalid_input("sample size must be positive");
  std::mt19937_64 rng(seed);
  auto labels = component_sequence(model.centers.k, n, rng);
  return sample_gaussian_labels(model, std::move(labels), rng());
}

LabeledDataset sample_gaussian_mixture_sized(const GaussianMixture& model,
                                             const std::vector<std::size_t>& counts,
                                             std::uint64_t seed) {
  if (counts.size() != model.centers.k)
    throw invalid_input("per-cluster count list must match the center count");
  return sample_gaussian_labels(model, sized_sequence(counts), seed);
}

std::pair<double, double> separation_stats(const CenterSet& centers) {
  if (centers.k < 2) throw invalid_input("separation needs at least two centers");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i + 1 < centers.k; ++i) {
    for (std::size_t j = i + 1; j < centers.k; ++j) {
      const double dist = squared_distance(centers[i], centers[j], centers.d);
      lo = std::min(lo, dist);
      hi = std::max(hi, dist);
    }
  }
  return {std::sqrt(lo), std::sqrt(hi)};
}

void DiffuseModel::validate() const {
  if (!(c > 20.0)) throw invalid_input("diffuse model requires c > 20");
  if (!(delta > 3.0)) throw invalid_input("diffuse model requires delta > 3");
  const double w = c * delta;
  bool right = false;
  bool left = false;
  for (const double x : inner) {
    if (std::abs(x - w) <= delta) {
      right = true;
    } else if (std::abs(x + w) <= delta) {
      left = true;
    } else {
      throw invalid_input("inner center outside both windows");
    }
  }
  if (!right || !left)
    throw invalid_input("each window must contain at least one true center");
  for (const double x : outer)
    if (std::abs(x) <= 20.0 * w)
      throw invalid_input("outer center inside the central interval");
}

std::vector<double> DiffuseModel::all_centers() const {
  std::vector<double> centers = inner;
  centers.insert(centers.end(), outer.begin(), outer.end());
  return centers;
}

Dataset sample_diffuse(const DiffuseModel& model, std::size_t n, std::uint64_t seed) {
  model.validate();
  if (n == 0) throw invalid_input("sample size must be positive");
  const auto centers = model.all_centers();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, centers.size() - 1);
  std::uniform_real_distribution<double> offset(-1.0, 1.0);
  std::vector<double> values(n);
  for (auto& v : values) v = centers[pick(rng)] + offset(rng);
  return Dataset(std::move(values), 1);
}

TrapReport check_trap(const DiffuseModel& model, const CenterSet& init, int iters,
                      const Dataset& data) {
  model.validate();
  if (init.d != 1 || data.dim() != 1)
    throw invalid_input("the diffuse model is one-dimensional");
  if (iters < 0) throw invalid_input("iteration count must be nonnegative");

  const double w = model.c * model.delta;
  const auto window_counts = [&](const CenterSet& centers) {
    std::array<int, 3> counts{0, 0, 0};
    for (std::size_t i = 0; i < centers.k; ++i) {
      const double x = centers[i][0];
      if (std::abs(x - w) <= model.delta) ++counts[0];
      if (std::abs(x + w) <= model.delta) ++counts[1];
      if (std::abs(x) > 20.0 * w) ++counts[2];
    }
    return counts;
  };

  TrapReport report;
  report.counts.push_back(window_counts(init));
  if (report.counts[0][0] < 1 || report.counts[0][1] < 1)
    throw invalid_input("each window needs at least one initial center");
  if (!model.outer.empty()) {
    // With true centers outside the central interval, each must have an
    // initial center within a tenth of its magnitude.
    for (const double truth : model.outer) {
      bool covered = false;
      for (std::size_t i = 0; i < init.k && !covered; ++i)
        covered = std::abs(init[i][0] - truth) <= std::abs(truth) / 10.0;
      if (!covered)
        throw invalid_input("an outer true center has no nearby initial center");
    }
  }

  CenterSet centers = init;
  std::vector<int> labels(data.size());
  for (int t = 0; t < iters; ++t) {
    kernel::assign_nearest(data, centers, labels.data());
    const Assignment assignment = group_by_label(labels, centers.k);
    centers = kernel::cluster_means(data, assignment, centers);
    report.counts.push_back(window_counts(centers));
  }

  report.trapped = true;
  for (const auto& counts : report.counts)
    if (counts[0] != report.counts[0][0] || counts[1] != report.counts[0][1])
      report.trapped = false;
  return report;
}

}  // namespace ffkm
