#pragma once

#include <string>
#include <vector>

#include "ffkm/synth.hpp"

namespace ffkm {

// Named synthetic layouts mimicking the common clustering benchmark families
// (cluster counts, per-cluster sizes, separation, overlap), so experiments can
// run offline. Layouts are fixed: the user seed only drives the sampling.
struct GeneratorPreset {
  enum class Kind { ball, gaussian };

  std::string name;
  Kind kind = Kind::gaussian;
  CenterSet centers;
  double scale = 1.0;                      // ball radius or Gaussian sigma
  std::vector<double> scales;              // optional per-cluster sigma override
  std::vector<std::size_t> cluster_sizes;  // empty: uniform component choice
  std::size_t default_n = 0;
  double truncate_sigmas = 3.0;  // Gaussian tail clip; the source sets are bounded
};

std::vector<std::string> preset_names();
GeneratorPreset make_preset(const std::string& name);

/// n == 0 uses the preset default. Fixed per-cluster sizes are rescaled
/// proportionally when n differs from their total.
LabeledDataset sample_preset(const GeneratorPreset& preset, std::size_t n,
                             std::uint64_t seed);

/// Sigma at which the given fraction of the closest center pair's samples
/// see a rival center within a 4:1 distance margin of their own.
/// Deterministic bisection against a fixed set of clipped unit offsets.
double sigma_for_overlap(const CenterSet& centers, double target,
                         std::uint64_t seed = 9001);

}  // namespace ffkm
