#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ffkm/core.hpp"
#include "ffkm/fission_fusion.hpp"

namespace ffkm {

enum class Algo { lloyd, ffkm, opkm, upkm };
enum class InitKind { random, kmeanspp };

struct ExperimentConfig {
  std::string dataset_label = "dataset";
  Algo algo = Algo::lloyd;
  InitKind init = InitKind::random;  // lloyd and ffkm; opkm/upkm seed their own
  OfmKind ofm = OfmKind::sd;
  double rd_delta = 0.1;
  MfoKind mfo = MfoKind::pd;
  SplitMethod split = SplitMethod::farthest_point;
  std::size_t k = 0;       // fitted centers for lloyd/ffkm; 0 = ground-truth k
  std::size_t k_init = 0;  // starting centers for opkm/upkm
  int trials = 100;
  std::uint64_t base_seed = 1;
  int max_outer = 100;
  LloydOptions lloyd;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string status = "ok";
  int ci = 0;
  double objective = 0.0;
  double sse = 0.0;
  double rho = 0.0;
  int outer_iters = 0;
  int lloyd_iters = 0;
  double wall_s = 0.0;  // measured but never persisted: records stay reproducible
};

struct AggregateRow {
  std::string dataset;
  std::string algorithm;
  double sr_percent = 0.0;
  double amr = 0.0;
  double rho_mean = 0.0;
  double rho_std = 0.0;
  double sse_mean = 0.0;
  double time_mean_s = 0.0;
  int trials = 0;  // trials included in the statistics
};

struct ExperimentResult {
  AggregateRow row;
  std::vector<TrialRecord> records;
  double reference = 0.0;  // rho denominator actually used
  int failed = 0;
};

std::string algorithm_label(const ExperimentConfig& config);

/// Runs `trials` seeded trials of the configured algorithm (seed = base_seed +
/// trial index), scores each against the ground truth, and aggregates. Trials
/// are independent and may run concurrently; results do not depend on the
/// thread count. The rho denominator is the converged objective of Lloyd
/// started from the true centers, clamped to the best objective seen.
ExperimentResult run_experiment(const Dataset& data, const CenterSet& truth,
                                const ExperimentConfig& config);

/// Recomputes an aggregate row from per-trial records (used to cross-check
/// emitted aggregates).
AggregateRow aggregate_records(const std::vector<TrialRecord>& records,
                               const std::string& dataset, const std::string& algorithm,
                               std::size_t k_star);

void write_trials_csv(const std::vector<TrialRecord>& records, std::ostream& os);
std::vector<TrialRecord> read_trials_csv(std::istream& is);

void write_table_csv(const std::vector<AggregateRow>& rows, std::ostream& os);
void write_table_json(const std::vector<AggregateRow>& rows, std::ostream& os);

const char* to_string(Algo algo);
const char* to_string(InitKind init);
Algo algo_from_string(const std::string& name);
InitKind init_from_string(const std::string& name);

}  // namespace ffkm
