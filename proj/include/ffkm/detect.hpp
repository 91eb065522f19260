#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffkm/types.hpp"

namespace ffkm {

// Detectors for the two kinds of mis-specified cluster in a local solution:
// a single center covering several true clusters (one-fit-many), and a pair
// of centers splitting one true cluster (many-fit-one). All of them are pure
// and deterministic; ties resolve to the lowest index or pair.

enum class OfmKind { sd, td, rd };
enum class MfoKind { pd, oi };

struct OfmResult {
  std::vector<double> score;  // per cluster
  int index = 0;              // extreme scorer
};

struct PdResult {
  int i = 0;
  int j = 1;  // i < j
  double distance = 0.0;
};

struct OiResult {
  std::vector<double> removal_objective;  // objective with center i removed
  int removed = 0;
  int nearest = 0;  // nearest surviving center to the removed one
};

/// Cluster with the largest mean squared in-cluster distance to its center.
OfmResult detect_ofm_sd(const Dataset& data, const LocalSolution& solution);

/// Cluster with the largest total squared in-cluster distance (unnormalized SD).
OfmResult detect_ofm_td(const Dataset& data, const LocalSolution& solution);

/// Cluster with the smallest fraction of members inside a ball of radius
/// delta * r around its center, where r is the smallest per-cluster median
/// member distance. The adaptive base radius makes the selection scale-free.
OfmResult detect_ofm_radius(const Dataset& data, const LocalSolution& solution,
                            double delta);

/// Pair of centers at minimal distance, optionally excluding one index.
PdResult detect_mfo_pd(const CenterSet& centers, std::optional<int> exclude = std::nullopt);

/// Center whose removal (with its points falling to their second-nearest
/// center) increases the objective the least, plus the nearest survivor.
OiResult detect_mfo_oi(const Dataset& data, const LocalSolution& solution,
                       std::optional<int> exclude = std::nullopt);

int detect_ofm(OfmKind kind, const Dataset& data, const LocalSolution& solution,
               double rd_delta);
std::pair<int, int> detect_mfo(MfoKind kind, const Dataset& data,
                               const LocalSolution& solution,
                               std::optional<int> exclude = std::nullopt);

const char* to_string(OfmKind kind);
const char* to_string(MfoKind kind);
OfmKind ofm_from_string(const std::string& name);
MfoKind mfo_from_string(const std::string& name);

}  // namespace ffkm
