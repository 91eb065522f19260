#include "ffkm/presets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace ffkm {

namespace {

CenterSet grid_centers(std::size_t side, double spacing, double origin = 0.0) {
  std::vector<double> values;
  values.reserve(side * side * 2);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      values.push_back(origin + spacing * static_cast<double>(c));
      values.push_back(origin + spacing * static_cast<double>(r));
    }
  }
  return CenterSet(std::move(values), 2);
}

// Uniform centers in [0, extent]^d with a minimum pairwise separation.
CenterSet spread_layout(std::size_t k, std::size_t d, double extent, double min_sep,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, extent);
  std::vector<double> values;
  values.reserve(k * d);
  std::vector<double> candidate(d);
  const double min_sep2 = min_sep * min_sep;
  std::size_t placed = 0;
  for (std::size_t attempt = 0; placed < k; ++attempt) {
    if (attempt > 1000000) throw invalid_input("could not place separated centers");
    for (auto& c : candidate) c = coord(rng);
    bool ok = true;
    for (std::size_t i = 0; i < placed && ok; ++i)
      ok = squared_distance(candidate.data(), values.data() + i * d, d) >= min_sep2;
    if (!ok) continue;
    values.insert(values.end(), candidate.begin(), candidate.end());
    ++placed;
  }
  return CenterSet(std::move(values), d);
}

CenterSet uniform_layout(std::size_t k, std::size_t d, double extent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, extent);
  std::vector<double> values(k * d);
  for (auto& v : values) v = coord(rng);
  return CenterSet(std::move(values), d);
}

std::vector<std::size_t> rescale_sizes(const std::vector<std::size_t>& sizes,
                                       std::size_t n) {
  std::size_t total = 0;
  for (const auto s : sizes) total += s;
  if (n == 0 || n == total) return sizes;
  std::vector<std::size_t> scaled(sizes.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    scaled[i] = sizes[i] * n / total;
    assigned += scaled[i];
  }
  for (std::size_t i = 0; assigned < n; i = (i + 1) % scaled.size()) {
    ++scaled[i];
    ++assigned;
  }
  return scaled;
}

}  // namespace

double sigma_for_overlap(const CenterSet& centers, double target, std::uint64_t seed) {
  if (!(target > 0.0 && target < 1.0)) throw invalid_input("target overlap must be in (0,1)");
  const std::size_t k = centers.k;
  const std::size_t d = centers.d;
  const std::size_t per_cluster = 4000;

  // The statistic is measured on the closest center pair: the share of that
  // pair's points whose nearest rival center comes within a 4:1 distance
  // margin of their own center. Offsets are clipped the same way the preset
  // sampler clips them, so the calibration sees the distribution it ships.
  std::size_t pi = 0, pj = 1;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double dist = squared_distance(centers[i], centers[j], d);
      if (dist < best) {
        best = dist;
        pi = i;
        pj = j;
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double clip2 = 9.0 * std::max(1.0, static_cast<double>(d) / 2.0);
  std::vector<double> offsets;
  offsets.reserve(2 * per_cluster * d);
  std::vector<double> candidate(d);
  while (offsets.size() < 2 * per_cluster * d) {
    double norm2 = 0.0;
    for (auto& c : candidate) {
      c = gauss(rng);
      norm2 += c * c;
    }
    if (norm2 > clip2) continue;
    offsets.insert(offsets.end(), candidate.begin(), candidate.end());
  }

  const auto overlap_at = [&](double sigma) {
    std::size_t overlapped = 0;
    std::vector<double> x(d);
    for (std::size_t t = 0; t < 2 * per_cluster; ++t) {
      const std::size_t s = t < per_cluster ? pi : pj;
      const double* u = offsets.data() + t * d;
      for (std::size_t c = 0; c < d; ++c) x[c] = centers[s][c] + sigma * u[c];
      const double own = squared_distance(x.data(), centers[s], d);
      double foreign = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < k; ++j) {
        if (j == s) continue;
        foreign = std::min(foreign, squared_distance(x.data(), centers[j], d));
      }
      if (foreign < 16.0 * own) ++overlapped;
    }
    return static_cast<double>(overlapped) / static_cast<double>(2 * per_cluster);
  };

  double lo = 0.0;
  double hi = std::sqrt(best);
  for (int iter = 0; iter < 48; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (overlap_at(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<std::string> preset_names() {
  return {"grid16", "a1", "a2", "a3", "s1", "s2", "s3", "s4", "dim032", "unbalance", "birch1"};
}

GeneratorPreset make_preset(const std::string& name) {
  GeneratorPreset preset;
  preset.name = name;

  if (name == "grid16") {
    // 4x4 grid of unit-radius balls with separation 30 times the radius.
    preset.kind = GeneratorPreset::Kind::ball;
    preset.centers = grid_centers(4, 30.0);
    preset.scale = 1.0;
    preset.default_n = 8000;
    return preset;
  }

  if (name == "a1" || name == "a2" || name == "a3") {
    const std::size_t k = name == "a1" ? 20 : name == "a2" ? 35 : 50;
    const std::uint64_t layout_seed = name == "a1" ? 101 : name == "a2" ? 102 : 103;
    // Constant cluster density: the square grows with the cluster count.
    const double extent = 1e5 * std::sqrt(static_cast<double>(k) / 20.0);
    preset.kind = GeneratorPreset::Kind::gaussian;
    preset.centers = spread_layout(k, 2, extent, 14000.0, layout_seed);
    preset.scale = sigma_for_overlap(preset.centers, 0.20);
    preset.cluster_sizes.assign(k, 150);
    preset.default_n = k * 150;
    return preset;
  }

  if (name == "s1" || name == "s2" || name == "s3" || name == "s4") {
    const double overlap = name == "s1"   ? 0.09
                           : name == "s2" ? 0.22
                           : name == "s3" ? 0.41
                                          : 0.44;
    const std::uint64_t layout_seed = 200 + (name.back() - '0');
    preset.kind = GeneratorPreset::Kind::gaussian;
    preset.centers = spread_layout(15, 2, 1e5, 16000.0, layout_seed);
    preset.scale = sigma_for_overlap(preset.centers, overlap);
    preset.cluster_sizes.assign(15, 333);
    preset.default_n = 15 * 333;
    return preset;
  }

  if (name == "dim032") {
    preset.kind = GeneratorPreset::Kind::gaussian;
    preset.centers = uniform_layout(16, 32, 100.0, 301);
    preset.scale = 5.0;
    preset.cluster_sizes.assign(16, 400);
    preset.default_n = 16 * 400;
    return preset;
  }

  if (name == "unbalance") {
    // Two well-separated groups: three dense heavy clusters on the left,
    // five tight light ones on the right.
    preset.kind = GeneratorPreset::Kind::gaussian;
    preset.centers = CenterSet::from_rows({{14000, 12000},
                                           {14000, 36000},
                                           {14000, 60000},
                                           {54000, 28000},
                                           {66000, 16000},
                                           {66000, 40000},
                                           {78000, 28000},
                                           {66000, 28000}});
    preset.scale = 900.0;
    preset.scales = {900, 900, 900, 700, 700, 700, 700, 700};
    preset.cluster_sizes = {2000, 2000, 2000, 100, 100, 100, 100, 100};
    preset.default_n = 6500;
    return preset;
  }

  if (name == "birch1") {
    preset.kind = GeneratorPreset::Kind::gaussian;
    preset.centers = grid_centers(10, 10000.0, 5000.0);
    preset.scale = 2500.0;
    preset.cluster_sizes.assign(100, 1000);
    preset.default_n = 100000;
    return preset;
  }

  throw invalid_input("unknown preset: " + name);
}

namespace {

LabeledDataset sample_truncated_gaussian(const GeneratorPreset& preset,
                                         const std::vector<std::size_t>& counts,
                                         std::uint64_t seed) {
  const std::size_t d = preset.centers.d;
  // The norm of a d-dimensional unit Gaussian concentrates near sqrt(d), so
  // the clip radius must grow with the dimension; in the plane it bounds the
  // offset at truncate_sigmas standard deviations.
  const double clip2 = preset.truncate_sigmas * preset.truncate_sigmas *
                       std::max(1.0, static_cast<double>(d) / 2.0);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> values;
  std::vector<int> labels;
  std::vector<double> offset(d);
  for (std::size_t s = 0; s < counts.size(); ++s) {
    const double sigma = preset.scales.empty() ? preset.scale : preset.scales[s];
    for (std::size_t i = 0; i < counts[s]; ++i) {
      double norm2 = 0.0;
      do {
        norm2 = 0.0;
        for (auto& o : offset) {
          o = gauss(rng);
          norm2 += o * o;
        }
      } while (norm2 > clip2);
      for (std::size_t c = 0; c < d; ++c)
        values.push_back(preset.centers[s][c] + sigma * offset[c]);
      labels.push_back(static_cast<int>(s));
    }
  }
  return {Dataset(std::move(values), d), std::move(labels)};
}

}  // namespace

LabeledDataset sample_preset(const GeneratorPreset& preset, std::size_t n,
                             std::uint64_t seed) {
  const std::size_t count = n == 0 ? preset.default_n : n;
  if (preset.kind == GeneratorPreset::Kind::ball) {
    const BallMixture model{preset.centers, preset.scale};
    if (preset.cluster_sizes.empty()) return sample_ball_mixture(model, count, seed);
    return sample_ball_mixture_sized(model, rescale_sizes(preset.cluster_sizes, count),
                                     seed);
  }
  std::vector<std::size_t> counts;
  if (preset.cluster_sizes.empty()) {
    // Uniform component choice, then the clipped per-component sampler.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, preset.centers.k - 1);
    counts.assign(preset.centers.k, 0);
    for (std::size_t t = 0; t < count; ++t) ++counts[pick(rng)];
    return sample_truncated_gaussian(preset, counts, rng());
  }
  return sample_truncated_gaussian(preset, rescale_sizes(preset.cluster_sizes, count),
                                   seed);
}

}  // namespace ffkm
