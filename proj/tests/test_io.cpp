#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ffkm/io.hpp"
#include "ffkm/synth.hpp"
#include "support.hpp"

using namespace ffkm;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content = "")
      : path((std::filesystem::temp_directory_path() / name).string()) {
    if (!content.empty()) {
      std::ofstream out(path);
      out << content;
    }
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("loads whitespace-delimited points") {
  TempFile f("ffkm_io_basic.txt", "0 0\n1 2\n");
  const Dataset data = load_points(f.path);
  CHECK(data.size() == 2);
  CHECK(data.dim() == 2);
  CHECK(data[1][1] == 2.0);
}

TEST_CASE("skips blank lines and tolerates odd spacing") {
  TempFile f("ffkm_io_blank.txt", "\n  1.5\t2.5  \n\n-3e2   4\n\n");
  const Dataset data = load_points(f.path);
  CHECK(data.size() == 2);
  CHECK(data[1][0] == -300.0);
}

TEST_CASE("reports the line of a column-count mismatch") {
  TempFile f("ffkm_io_ragged.txt", "1 2 3\n4 5\n");
  try {
    load_points(f.path);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("rejects non-numeric tokens, non-finite values, and empty files") {
  TempFile bad("ffkm_io_bad.txt", "1 mouse\n");
  CHECK_THROWS_AS(load_points(bad.path), parse_error);
  TempFile inf("ffkm_io_inf.txt", "1 inf\n");
  CHECK_THROWS_AS(load_points(inf.path), parse_error);
  TempFile empty("ffkm_io_empty.txt", "\n\n");
  CHECK_THROWS_AS(load_points(empty.path), parse_error);
  CHECK_THROWS_AS(load_points("/nonexistent/ffkm.txt"), parse_error);
}

TEST_CASE("drops a trailing integer label column only when asked") {
  TempFile f("ffkm_io_labeled.txt", "1 2 0\n3 4 1\n");
  const Dataset plain = load_points(f.path);
  CHECK(plain.dim() == 3);
  const Dataset labeled = load_points(f.path, true);
  CHECK(labeled.dim() == 2);
  CHECK(labeled[1][1] == 4.0);

  TempFile frac("ffkm_io_fraclabel.txt", "1 2 0.5\n");
  CHECK_THROWS_AS(load_points(frac.path, true), parse_error);
}

TEST_CASE("truth files load as center sets") {
  std::string content;
  for (int i = 0; i < 15; ++i)
    content += std::to_string(i) + " " + std::to_string(2 * i) + "\n";
  TempFile f("ffkm_io_truth.txt", content);
  const CenterSet truth = load_truth(f.path);
  CHECK(truth.k == 15);
  CHECK(truth.d == 2);
}

TEST_CASE("save and load round-trips coordinates exactly") {
  const BallMixture model{testsupport::random_centers(4, 3, 3, 0, 100), 2.0};
  const LabeledDataset sample = sample_ball_mixture(model, 300, 17);
  TempFile f("ffkm_io_roundtrip.txt");
  save_points(sample.data, f.path);
  const Dataset loaded = load_points(f.path);
  CHECK(loaded.values() == sample.data.values());

  TempFile g("ffkm_io_roundtrip_centers.txt");
  save_centers(model.centers, g.path);
  CHECK(load_truth(g.path) == model.centers);
}

TEST_CASE("unwritable paths raise an io error") {
  const Dataset data = testsupport::random_dataset(3, 2, 1);
  CHECK_THROWS_AS(save_points(data, "/nonexistent/dir/out.txt"), io_error);
}

}  // TEST_SUITE
