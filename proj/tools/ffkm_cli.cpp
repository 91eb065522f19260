#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffkm/experiment.hpp"
#include "ffkm/io.hpp"
#include "ffkm/metrics.hpp"
#include "ffkm/presets.hpp"

namespace {

std::string basename_of(const std::string& path) {
  const auto pos = path.find_last_of("/\\");
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ffkm::io_error("cannot write " + path);
  out << text;
  if (!out) throw ffkm::io_error("failed writing " + path);
}

struct RunArgs {
  std::string data_path;
  std::string generate;
  std::string truth_path;
  bool labeled = false;
  std::string algo = "lloyd";
  std::string init = "random";
  std::string ofm = "sd";
  std::string mfo = "pd";
  std::string split = "farthest_point";
  double delta = 0.1;
  std::size_t k = 0;
  std::size_t k_star = 0;
  std::size_t k_init = 0;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 12345;
  int trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  int max_iter = 300;
  int max_outer = 100;
  std::string out;
  std::string trials_out;
  std::string format = "csv";
};

int do_run(const RunArgs& args) {
  if (args.data_path.empty() == args.generate.empty())
    throw ffkm::invalid_input("pass exactly one of --data and --generate");
  if (args.format != "csv" && args.format != "json")
    throw ffkm::invalid_input("format must be csv or json");

  ffkm::ExperimentConfig config;
  config.algo = ffkm::algo_from_string(args.algo);
  config.init = ffkm::init_from_string(args.init);
  config.ofm = ffkm::ofm_from_string(args.ofm);
  config.mfo = ffkm::mfo_from_string(args.mfo);
  config.split = ffkm::split_from_string(args.split);
  config.rd_delta = args.delta;
  config.k = args.k;
  config.k_init = args.k_init;
  config.trials = args.trials;
  config.base_seed = args.seed;
  config.max_outer = args.max_outer;
  config.lloyd.tol = args.tol;
  config.lloyd.max_iter = args.max_iter;

  std::unique_ptr<ffkm::Dataset> data;
  std::unique_ptr<ffkm::CenterSet> truth;
  if (!args.generate.empty()) {
    const ffkm::GeneratorPreset preset = ffkm::make_preset(args.generate);
    ffkm::LabeledDataset sample = ffkm::sample_preset(preset, args.gen_n, args.gen_seed);
    data = std::make_unique<ffkm::Dataset>(std::move(sample.data));
    truth = std::make_unique<ffkm::CenterSet>(preset.centers);
    config.dataset_label = args.generate;
  } else {
    if (args.truth_path.empty())
      throw ffkm::invalid_input("--data requires --truth with the true centers");
    data = std::make_unique<ffkm::Dataset>(ffkm::load_points(args.data_path, args.labeled));
    truth = std::make_unique<ffkm::CenterSet>(ffkm::load_truth(args.truth_path));
    config.dataset_label = basename_of(args.data_path);
  }
  if (args.k_star != 0 && args.k_star != truth->k)
    throw ffkm::invalid_input("--k-star does not match the ground-truth center count");

  const ffkm::ExperimentResult result = ffkm::run_experiment(*data, *truth, config);

  std::ostringstream table;
  if (args.format == "json") {
    ffkm::write_table_json({result.row}, table);
  } else {
    ffkm::write_table_csv({result.row}, table);
  }
  if (args.out.empty()) {
    std::cout << table.str();
  } else {
    write_text(args.out, table.str());
    std::ostringstream trials;
    ffkm::write_trials_csv(result.records, trials);
    const std::string trials_path =
        args.trials_out.empty() ? args.out + ".trials.csv" : args.trials_out;
    write_text(trials_path, trials.str());
  }
  if (result.failed > 0)
    std::cerr << result.failed << " of " << args.trials
              << " trials failed and were excluded\n";
  return 0;
}

struct GenArgs {
  std::string preset;
  std::size_t n = 0;
  std::uint64_t seed = 12345;
  std::string out;
  std::string truth_out;
  std::string labels_out;
};

int do_gen(const GenArgs& args) {
  const ffkm::GeneratorPreset preset = ffkm::make_preset(args.preset);
  const ffkm::LabeledDataset sample = ffkm::sample_preset(preset, args.n, args.seed);
  ffkm::save_points(sample.data, args.out);
  if (!args.truth_out.empty()) ffkm::save_centers(preset.centers, args.truth_out);
  if (!args.labels_out.empty()) {
    std::ostringstream text;
    for (const int label : sample.labels) text << label << '\n';
    write_text(args.labels_out, text.str());
  }
  std::cout << "wrote " << sample.data.size() << " points (d=" << sample.data.dim()
            << ", k*=" << preset.centers.k << ") to " << args.out << "\n";
  return 0;
}

struct EvalArgs {
  std::string data_path;
  std::string truth_path;
  std::string centers_path;
  bool labeled = false;
  std::string format = "csv";
  std::string out;
};

int do_eval(const EvalArgs& args) {
  const ffkm::Dataset data = ffkm::load_points(args.data_path, args.labeled);
  const ffkm::CenterSet truth = ffkm::load_truth(args.truth_path);
  const ffkm::CenterSet centers = ffkm::load_truth(args.centers_path);

  const double objective = ffkm::objective(data, centers);
  const double sse = ffkm::sse(data, centers);
  const int ci = ffkm::centroid_index(centers, truth);
  const ffkm::LocalSolution from_truth = ffkm::lloyd(data, truth);
  const double reference = std::min(from_truth.objective, objective);
  const double rho = reference > 0.0 ? objective / reference : 1.0;

  std::ostringstream text;
  if (args.format == "json") {
    char buffer[256];
    std::snprintf(buffer, sizeof(buffer),
                  "{\"dataset\": \"%s\", \"k\": %zu, \"ci\": %d, \"objective\": %.17g, "
                  "\"sse\": %.17g, \"rho\": %.17g}\n",
                  basename_of(args.data_path).c_str(), centers.k, ci, objective, sse, rho);
    text << buffer;
  } else {
    char buffer[256];
    std::snprintf(buffer, sizeof(buffer), "%s,%zu,%d,%.17g,%.17g,%.17g\n",
                  basename_of(args.data_path).c_str(), centers.k, ci, objective, sse, rho);
    text << "dataset,k,ci,objective,sse,rho\n" << buffer;
  }
  if (args.out.empty()) {
    std::cout << text.str();
  } else {
    write_text(args.out, text.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fission-fusion k-means: benchmark harness and dataset generator"};
  app.require_subcommand(0, 1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "run a seeded multi-trial experiment");
  run->add_option("--data", run_args.data_path, "points file (one point per line)");
  run->add_option("--generate", run_args.generate, "generate a named synthetic dataset");
  run->add_option("--gen-n", run_args.gen_n, "generated point count (0 = preset default)");
  run->add_option("--gen-seed", run_args.gen_seed, "generation seed");
  run->add_option("--truth", run_args.truth_path, "ground-truth centers file");
  run->add_flag("--labeled", run_args.labeled, "data file has a trailing label column");
  run->add_option("--algo", run_args.algo, "lloyd | ffkm | opkm | upkm");
  run->add_option("--init", run_args.init, "random | kmeanspp (lloyd and ffkm)");
  run->add_option("--ofm", run_args.ofm, "one-fit-many detector: sd | td | rd");
  run->add_option("--mfo", run_args.mfo, "many-fit-one detector: pd | oi");
  run->add_option("--delta", run_args.delta, "rd detector radius factor");
  run->add_option("--split", run_args.split, "farthest_point | local_2means");
  run->add_option("--k", run_args.k, "fitted centers (default: ground-truth k)");
  run->add_option("--k-star", run_args.k_star, "expected true center count (checked)");
  run->add_option("--k-init", run_args.k_init, "starting centers for opkm/upkm");
  run->add_option("--trials", run_args.trials, "number of seeded trials");
  run->add_option("--seed", run_args.seed, "base seed; trial t uses seed + t");
  run->add_option("--tol", run_args.tol, "Lloyd relative-decrease tolerance");
  run->add_option("--max-iter", run_args.max_iter, "Lloyd iteration cap");
  run->add_option("--max-outer", run_args.max_outer, "ffkm outer iteration cap");
  run->add_option("--out", run_args.out, "aggregate output path (default: stdout)");
  run->add_option("--trials-out", run_args.trials_out,
                  "per-trial records path (default: <out>.trials.csv)");
  run->add_option("--format", run_args.format, "csv | json");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "emit a synthetic dataset");
  gen->add_option("--preset", gen_args.preset, "preset name (see --list)")->required();
  gen->add_option("--n", gen_args.n, "point count (0 = preset default)");
  gen->add_option("--seed", gen_args.seed, "sampling seed");
  gen->add_option("--out", gen_args.out, "points output path")->required();
  gen->add_option("--truth-out", gen_args.truth_out, "true centers output path");
  gen->add_option("--labels-out", gen_args.labels_out, "per-point labels output path");

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "score saved centers against the truth");
  eval->add_option("--data", eval_args.data_path)->required();
  eval->add_option("--truth", eval_args.truth_path)->required();
  eval->add_option("--centers", eval_args.centers_path)->required();
  eval->add_flag("--labeled", eval_args.labeled);
  eval->add_option("--format", eval_args.format, "csv | json");
  eval->add_option("--out", eval_args.out, "output path (default: stdout)");

  bool list_presets = false;
  app.add_flag("--list", list_presets, "list generator presets");

  try {
    app.parse(argc, argv);
    if (list_presets) {
      for (const auto& name : ffkm::preset_names()) std::cout << name << "\n";
      return 0;
    }
    if (run->parsed()) return do_run(run_args);
    if (gen->parsed()) return do_gen(gen_args);
    if (eval->parsed()) return do_eval(eval_args);
    std::cerr << "a subcommand is required; run with --help\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ffkm::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ffkm::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ffkm::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
