#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ffkm/experiment.hpp"
#include "ffkm/synth.hpp"
#include "support.hpp"

using namespace ffkm;

namespace {

struct SmallMixture {
  BallMixture model{CenterSet::from_rows({{0, 0}, {50, 0}, {0, 50}, {50, 50}}), 1.0};
  Dataset data = sample_ball_mixture(model, 400, 77).data;
};

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("a trial landing on the reference solution gives ci 0 and rho 1") {
  // Vanishingly small balls: kmeans++ lands one center per ball and Lloyd
  // reaches the same fixed point as the truth-seeded reference run.
  const BallMixture model{CenterSet::from_rows({{0, 0}, {50, 0}, {0, 50}, {50, 50}}),
                          1e-6};
  const Dataset data = sample_ball_mixture(model, 200, 5).data;
  ExperimentConfig config;
  config.algo = Algo::lloyd;
  config.init = InitKind::kmeanspp;
  config.trials = 1;
  config.base_seed = 4;
  const ExperimentResult result = run_experiment(data, model.centers, config);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].ok);
  CHECK(result.records[0].ci == 0);
  CHECK(result.records[0].rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.row.sr_percent == 100.0);
  CHECK(result.row.amr == 0.0);
}

TEST_CASE("per-trial records are byte-identical across repeated runs") {
  SmallMixture m;
  ExperimentConfig config;
  config.algo = Algo::ffkm;
  config.trials = 6;
  config.base_seed = 11;
  const ExperimentResult a = run_experiment(m.data, m.model.centers, config);
  const ExperimentResult b = run_experiment(m.data, m.model.centers, config);
  std::ostringstream csv_a, csv_b;
  write_trials_csv(a.records, csv_a);
  write_trials_csv(b.records, csv_b);
  CHECK(csv_a.str() == csv_b.str());
}

TEST_CASE("aggregates are recomputable from the persisted records") {
  SmallMixture m;
  ExperimentConfig config;
  config.algo = Algo::lloyd;
  config.trials = 12;
  config.base_seed = 3;
  config.dataset_label = "small";
  const ExperimentResult result = run_experiment(m.data, m.model.centers, config);

  std::stringstream io;
  write_trials_csv(result.records, io);
  const std::vector<TrialRecord> parsed = read_trials_csv(io);
  REQUIRE(parsed.size() == result.records.size());
  const AggregateRow redo =
      aggregate_records(parsed, "small", algorithm_label(config), m.model.centers.k);

  CHECK(std::abs(redo.sr_percent - result.row.sr_percent) <= 1e-12);
  CHECK(std::abs(redo.amr - result.row.amr) <= 1e-12);
  CHECK(std::abs(redo.rho_mean - result.row.rho_mean) <= 1e-12 * result.row.rho_mean);
  CHECK(std::abs(redo.rho_std - result.row.rho_std) <=
        1e-12 * (1.0 + result.row.rho_std));
  CHECK(std::abs(redo.sse_mean - result.row.sse_mean) <= 1e-12 * result.row.sse_mean);
  CHECK(redo.trials == result.row.trials);
}

TEST_CASE("the rho reference never exceeds the best observed objective") {
  SmallMixture m;
  ExperimentConfig config;
  config.algo = Algo::lloyd;
  config.trials = 10;
  config.base_seed = 21;
  const ExperimentResult result = run_experiment(m.data, m.model.centers, config);
  for (const TrialRecord& record : result.records) {
    if (!record.ok) continue;
    CHECK(record.rho >= 1.0 - 1e-12);
    CHECK(result.reference <= record.objective * (1 + 1e-12));
  }
}

TEST_CASE("failing trials are recorded and excluded without hurting the rest") {
  // Every point identical: a k = 2 run cannot keep both clusters populated.
  const Dataset degenerate(std::vector<double>{5, 5, 5}, 1);
  const CenterSet truth({5, 6}, 1);
  ExperimentConfig config;
  config.algo = Algo::ffkm;
  config.trials = 3;
  const ExperimentResult result = run_experiment(degenerate, truth, config);
  CHECK(result.failed == 3);
  CHECK(result.row.trials == 0);
  for (const TrialRecord& record : result.records) {
    CHECK(!record.ok);
    CHECK(record.status.find("error") == 0);
  }
}

TEST_CASE("invalid configurations abort before any trial") {
  SmallMixture m;
  ExperimentConfig config;
  config.trials = 0;
  CHECK_THROWS_AS(run_experiment(m.data, m.model.centers, config), invalid_input);
  config.trials = 1;
  config.algo = Algo::opkm;
  config.k_init = 2;  // below k_star
  CHECK_THROWS_AS(run_experiment(m.data, m.model.centers, config), invalid_input);
}

TEST_CASE("csv table has the fixed header and one line per row") {
  AggregateRow row;
  row.dataset = "demo";
  row.algorithm = "lloyd";
  row.trials = 2;
  std::ostringstream os;
  write_table_csv({row}, os);
  const std::string text = os.str();
  CHECK(text.find("dataset,algorithm,sr_percent,amr,rho_mean,rho_std,sse_mean,"
                   "time_mean_s,trials\n") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}

TEST_CASE("json output parses back to the same table") {
  SmallMixture m;
  ExperimentConfig config;
  config.algo = Algo::lloyd;
  config.trials = 5;
  config.dataset_label = "roundtrip";
  const ExperimentResult result = run_experiment(m.data, m.model.centers, config);

  std::ostringstream os;
  write_table_json({result.row}, os);
  const auto parsed = nlohmann::json::parse(os.str());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["dataset"] == "roundtrip");
  CHECK(parsed[0]["algorithm"] == algorithm_label(config));
  CHECK(parsed[0]["trials"] == result.row.trials);
  // Values survive the 6-significant-digit formatting.
  CHECK(parsed[0]["sse_mean"].get<double>() ==
        doctest::Approx(result.row.sse_mean).epsilon(1e-5));
  CHECK(parsed[0]["rho_mean"].get<double>() ==
        doctest::Approx(result.row.rho_mean).epsilon(1e-5));
}

TEST_CASE("algorithm labels identify the variant") {
  ExperimentConfig config;
  config.algo = Algo::ffkm;
  config.ofm = OfmKind::rd;
  config.rd_delta = 0.25;
  config.mfo = MfoKind::oi;
  CHECK(algorithm_label(config) == "ffkm-rd0.25+oi");
  config.algo = Algo::lloyd;
  config.init = InitKind::kmeanspp;
  CHECK(algorithm_label(config) == "kmeans++");
  config.algo = Algo::opkm;
  config.k_init = 64;
  config.mfo = MfoKind::pd;
  CHECK(algorithm_label(config) == "opkm-pd-k64");
}

TEST_CASE("enum names round-trip") {
  CHECK(algo_from_string("ffkm") == Algo::ffkm);
  CHECK(init_from_string("kmeanspp") == InitKind::kmeanspp);
  CHECK_THROWS_AS(algo_from_string("bogus"), invalid_input);
  CHECK_THROWS_AS(init_from_string("bogus"), invalid_input);
}

}  // TEST_SUITE
