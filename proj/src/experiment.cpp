#include "ffkm/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "ffkm/metrics.hpp"

namespace ffkm {

namespace {

std::string format_double(const char* fmt, double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), fmt, v);
  return buffer;
}

std::string sanitize(std::string text) {
  for (auto& c : text)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return text;
}

struct TrialOutcome {
  LocalSolution solution;
  int outer_iters = 0;
};

TrialOutcome run_trial(const Dataset& data, const CenterSet& truth,
                       const ExperimentConfig& config, std::uint64_t seed) {
  const std::size_t k_star = truth.k;
  const std::size_t k = config.k == 0 ? k_star : config.k;
  const auto make_init = [&]() {
    return config.init == InitKind::random ? init_random(data, k, seed)
                                           : init_kmeanspp(data, k, seed);
  };

  switch (config.algo) {
    case Algo::lloyd:
      return {lloyd(data, make_init(), config.lloyd), 0};
    case Algo::ffkm: {
      FfkmConfig fc;
      fc.ofm = config.ofm;
      fc.rd_delta = config.rd_delta;
      fc.mfo = config.mfo;
      fc.split = config.split;
      fc.max_outer = config.max_outer;
      fc.lloyd = config.lloyd;
      fc.seed = seed;
      FfkmResult result = fission_fusion(data, make_init(), fc);
      return {std::move(result.solution),
              static_cast<int>(result.trace.iterations.size())};
    }
    case Algo::opkm: {
      LocalSolution sol =
          over_parameterized(data, config.k_init, k_star, config.mfo, seed, config.lloyd);
      return {std::move(sol), static_cast<int>(config.k_init - k_star)};
    }
    case Algo::upkm: {
      LocalSolution sol = under_parameterized(data, config.k_init, k_star, config.ofm,
                                              config.rd_delta, config.split, seed,
                                              config.lloyd);
      return {std::move(sol), static_cast<int>(k_star - config.k_init)};
    }
  }
  throw invalid_input("unknown algorithm");
}

void validate(const Dataset& data, const CenterSet& truth, const ExperimentConfig& config) {
  if (truth.d != data.dim())
    throw invalid_input("ground truth dimension does not match the dataset");
  if (config.trials < 1) throw invalid_input("need at least one trial");
  const std::size_t k_star = truth.k;
  const std::size_t k = config.k == 0 ? k_star : config.k;
  if (k > data.size()) throw invalid_input("more centers than points");
  if (config.algo == Algo::opkm) {
    if (config.k_init < k_star) throw invalid_input("opkm needs k_init at or above k_star");
    if (config.k_init > data.size()) throw invalid_input("k_init exceeds the point count");
  }
  if (config.algo == Algo::upkm) {
    if (config.k_init == 0) throw invalid_input("upkm needs a positive k_init");
    if (config.k_init > k_star) throw invalid_input("upkm needs k_init at or below k_star");
  }
}

}  // namespace

std::string algorithm_label(const ExperimentConfig& config) {
  std::ostringstream label;
  switch (config.algo) {
    case Algo::lloyd:
      label << (config.init == InitKind::kmeanspp ? "kmeans++" : "lloyd");
      break;
    case Algo::ffkm:
      label << "ffkm-" << to_string(config.ofm);
      if (config.ofm == OfmKind::rd) label << format_double("%.3g", config.rd_delta);
      label << "+" << to_string(config.mfo);
      if (config.init == InitKind::kmeanspp) label << "-kmeans++";
      if (config.split == SplitMethod::local_2means) label << "-2means";
      break;
    case Algo::opkm:
      label << "opkm-" << to_string(config.mfo) << "-k" << config.k_init;
      break;
    case Algo::upkm:
      label << "upkm-" << to_string(config.ofm) << "-k" << config.k_init;
      break;
  }
  return label.str();
}

ExperimentResult run_experiment(const Dataset& data, const CenterSet& truth,
                                const ExperimentConfig& config) {
  validate(data, truth, config);

  // rho denominator: Lloyd converged from the true centers…
  const LocalSolution from_truth = lloyd(data, truth, config.lloyd);
  double reference = from_truth.objective;

  ExperimentResult result;
  result.records.resize(static_cast<std::size_t>(config.trials));

  const auto trials = static_cast<std::ptrdiff_t>(config.trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < trials; ++t) {
    TrialRecord& record = result.records[static_cast<std::size_t>(t)];
    record.trial = static_cast<int>(t);
    record.seed = config.base_seed + static_cast<std::uint64_t>(t);
    const auto started = std::chrono::steady_clock::now();
    try {
      TrialOutcome outcome = run_trial(data, truth, config, record.seed);
      record.ok = true;
      record.ci = centroid_index(outcome.solution.centers, truth);
      record.objective = outcome.solution.objective;
      record.sse = static_cast<double>(data.size()) * record.objective;
      record.outer_iters = outcome.outer_iters;
      record.lloyd_iters = outcome.solution.iterations;
    } catch (const std::exception& e) {
      record.ok = false;
      record.status = std::string("error: ") + e.what();
    }
    record.wall_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }

  // …clamped to the best objective seen, so the ratio never dips below one
  // for a solution that merely beats the truth-seeded run.
  for (const TrialRecord& record : result.records)
    if (record.ok) reference = std::min(reference, record.objective);
  result.reference = reference;

  for (TrialRecord& record : result.records) {
    if (!record.ok) continue;
    record.rho = reference > 0.0 ? record.objective / reference
                                 : (record.objective == 0.0 ? 1.0
                                                            : std::numeric_limits<double>::infinity());
  }

  result.row = aggregate_records(result.records, config.dataset_label,
                                 algorithm_label(config), truth.k);
  for (const TrialRecord& record : result.records)
    if (!record.ok) ++result.failed;
  return result;
}

AggregateRow aggregate_records(const std::vector<TrialRecord>& records,
                               const std::string& dataset, const std::string& algorithm,
                               std::size_t k_star) {
  AggregateRow row;
  row.dataset = dataset;
  row.algorithm = algorithm;

  std::vector<int> cis;
  double rho_sum = 0.0;
  double sse_sum = 0.0;
  double time_sum = 0.0;
  for (const TrialRecord& record : records) {
    if (!record.ok) continue;
    cis.push_back(record.ci);
    rho_sum += record.rho;
    sse_sum += record.sse;
    time_sum += record.wall_s;
  }
  row.trials = static_cast<int>(cis.size());
  if (cis.empty()) return row;

  const auto n = static_cast<double>(cis.size());
  row.sr_percent = success_rate(cis);
  row.amr = average_missing_rate(cis, k_star);
  row.rho_mean = rho_sum / n;
  double var = 0.0;
  for (const TrialRecord& record : records) {
    if (!record.ok) continue;
    const double diff = record.rho - row.rho_mean;
    var += diff * diff;
  }
  row.rho_std = std::sqrt(var / n);
  row.sse_mean = sse_sum / n;
  row.time_mean_s = time_sum / n;
  return row;
}

void write_trials_csv(const std::vector<TrialRecord>& records, std::ostream& os) {
  os << "trial,seed,status,ci,objective,sse,rho,outer_iters,lloyd_iters\n";
  for (const TrialRecord& record : records) {
    os << record.trial << ',' << record.seed << ',' << sanitize(record.status) << ','
       << record.ci << ',' << format_double("%.17g", record.objective) << ','
       << format_double("%.17g", record.sse) << ','
       << format_double("%.17g", record.rho) << ',' << record.outer_iters << ','
       << record.lloyd_iters << '\n';
  }
}

std::vector<TrialRecord> read_trials_csv(std::istream& is) {
  std::vector<TrialRecord> records;
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 9) throw invalid_input("malformed trial record: " + line);
    TrialRecord record;
    record.trial = std::stoi(fields[0]);
    record.seed = std::stoull(fields[1]);
    record.status = fields[2];
    record.ok = record.status == "ok";
    record.ci = std::stoi(fields[3]);
    record.objective = std::stod(fields[4]);
    record.sse = std::stod(fields[5]);
    record.rho = std::stod(fields[6]);
    record.outer_iters = std::stoi(fields[7]);
    record.lloyd_iters = std::stoi(fields[8]);
    records.push_back(std::move(record));
  }
  return records;
}

void write_table_csv(const std::vector<AggregateRow>& rows, std::ostream& os) {
  os << "dataset,algorithm,sr_percent,amr,rho_mean,rho_std,sse_mean,time_mean_s,trials\n";
  for (const AggregateRow& row : rows) {
    os << sanitize(row.dataset) << ',' << sanitize(row.algorithm) << ','
       << format_double("%.6g", row.sr_percent) << ',' << format_double("%.6g", row.amr)
       << ',' << format_double("%.6g", row.rho_mean) << ','
       << format_double("%.6g", row.rho_std) << ','
       << format_double("%.6g", row.sse_mean) << ','
       << format_double("%.6g", row.time_mean_s) << ',' << row.trials << '\n';
  }
}

void write_table_json(const std::vector<AggregateRow>& rows, std::ostream& os) {
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const AggregateRow& row = rows[i];
    os << "  {\"dataset\": \"" << row.dataset << "\", \"algorithm\": \"" << row.algorithm
       << "\", \"sr_percent\": " << format_double("%.6g", row.sr_percent)
       << ", \"amr\": " << format_double("%.6g", row.amr)
       << ", \"rho_mean\": " << format_double("%.6g", row.rho_mean)
       << ", \"rho_std\": " << format_double("%.6g", row.rho_std)
       << ", \"sse_mean\": " << format_double("%.6g", row.sse_mean)
       << ", \"time_mean_s\": " << format_double("%.6g", row.time_mean_s)
       << ", \"trials\": " << row.trials << "}" << (i + 1 < rows.size() ? "," : "")
       << "\n";
  }
  os << "]\n";
}

const char* to_string(Algo algo) {
  switch (algo) {
    case Algo::lloyd: return "lloyd";
    case Algo::ffkm: return "ffkm";
    case Algo::opkm: return "opkm";
    case Algo::upkm: return "upkm";
  }
  return "?";
}

const char* to_string(InitKind init) {
  return init == InitKind::random ? "random" : "kmeanspp";
}

Algo algo_from_string(const std::string& name) {
  if (name == "lloyd") return Algo::lloyd;
  if (name == "ffkm") return Algo::ffkm;
  if (name == "opkm") return Algo::opkm;
  if (name == "upkm") return Algo::upkm;
  throw invalid_input("unknown algorithm: " + name);
}

InitKind init_from_string(const std::string& name) {
  if (name == "random") return InitKind::random;
  if (name == "kmeanspp") return InitKind::kmeanspp;
  throw invalid_input("unknown init scheme: " + name);
}

}  // namespace ffkm
