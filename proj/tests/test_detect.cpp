#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ffkm/core.hpp"
#include "ffkm/detect.hpp"
#include "ffkm/reference.hpp"
#include "ffkm/synth.hpp"
#include "support.hpp"

using namespace ffkm;

namespace {

Dataset d1(std::vector<double> xs) { return Dataset(std::move(xs), 1); }
CenterSet c1(std::vector<double> xs) { return CenterSet(std::move(xs), 1); }

// Converged local solution where center 0 straddles the gap between {0, 10}
// and center 1 sits on the lone point at 100.
struct GapCase {
  Dataset data = d1({0, 10, 100});
  LocalSolution solution = lloyd(data, c1({5, 100}));
};

// Local solution with one center covering two balls and two centers splitting
// the third ball; built by running Lloyd from a covering init.
struct CoveringCase {
  Dataset data;
  LocalSolution solution;
  explicit CoveringCase(std::uint64_t seed)
      : data([&] {
          const BallMixture model{CenterSet::from_rows({{0, 0}, {40, 0}, {80, 0}}), 1.0};
          return sample_ball_mixture(model, 600, seed).data;
        }()),
        solution(lloyd(data, CenterSet::from_rows({{20, 0}, {79.5, 0}, {80.5, 0}}))) {}
};

LocalSolution transformed(const Dataset& data, const LocalSolution& solution, double s,
                          const std::vector<double>& shift, Dataset* out_data) {
  const std::size_t d = data.dim();
  std::vector<double> moved = data.values();
  for (std::size_t i = 0; i < moved.size(); ++i)
    moved[i] = s * moved[i] + shift[i % d];
  std::vector<double> moved_centers = solution.centers.values;
  for (std::size_t i = 0; i < moved_centers.size(); ++i)
    moved_centers[i] = s * moved_centers[i] + shift[i % d];
  *out_data = Dataset(std::move(moved), d);
  LocalSolution result;
  result.centers = CenterSet(std::move(moved_centers), d);
  result.assignment = solution.assignment;
  result.objective = objective(*out_data, result.centers);
  result.iterations = solution.iterations;
  result.degenerate = solution.degenerate;
  return result;
}

}  // namespace

TEST_SUITE("detect") {

TEST_CASE("sd picks the cluster with the largest mean squared spread") {
  GapCase g;
  const OfmResult r = detect_ofm_sd(g.data, g.solution);
  CHECK(r.score[0] == doctest::Approx(25.0));
  CHECK(r.score[1] == doctest::Approx(0.0));
  CHECK(r.index == 0);
}

TEST_CASE("sd ties on all-singleton clusters resolve to index zero") {
  const Dataset data = d1({0, 10, 20});
  const LocalSolution sol = lloyd(data, c1({0, 10, 20}));
  const OfmResult r = detect_ofm_sd(data, sol);
  for (const double s : r.score) CHECK(s == 0.0);
  CHECK(r.index == 0);
}

TEST_CASE("sd finds the covering center in a constructed local minimum") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    CoveringCase c(seed);
    REQUIRE(!c.solution.any_empty());
    const OfmResult r = detect_ofm_sd(c.data, c.solution);
    CHECK(r.index == 0);
    // Scores must match a naive recomputation.
    for (std::size_t i = 0; i < 3; ++i) {
      double sum = 0.0;
      for (const int t : c.solution.assignment.clusters[i])
        sum += squared_distance(c.data[static_cast<std::size_t>(t)],
                                c.solution.centers[i], c.data.dim());
      sum /= static_cast<double>(c.solution.assignment.cluster_size(i));
      CHECK(r.score[i] == doctest::Approx(sum).epsilon(1e-12));
    }
  }
}

TEST_CASE("td is the unnormalized sd and prefers mass") {
  GapCase g;
  const OfmResult r = detect_ofm_td(g.data, g.solution);
  CHECK(r.score[0] == doctest::Approx(50.0));
  CHECK(r.score[1] == doctest::Approx(0.0));
  CHECK(r.index == 0);

  // Equal per-point spread, ten times the mass: the heavy cluster wins.
  std::vector<double> xs;
  for (int rep = 0; rep < 10; ++rep) {
    xs.push_back(-1);
    xs.push_back(1);
  }
  xs.push_back(99);
  xs.push_back(101);
  const Dataset data = d1(std::move(xs));
  const LocalSolution sol = lloyd(data, c1({0, 100}));
  const OfmResult heavy = detect_ofm_td(data, sol);
  const OfmResult sd = detect_ofm_sd(data, sol);
  CHECK(sd.score[0] == doctest::Approx(sd.score[1]));
  CHECK(heavy.index == 0);
}

TEST_CASE("td equals cluster size times sd on random local solutions") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Dataset data = testsupport::random_dataset(120, 2, seed);
    const LocalSolution sol = lloyd(data, init_kmeanspp(data, 5, seed));
    if (sol.any_empty()) continue;
    const OfmResult sd = detect_ofm_sd(data, sol);
    const OfmResult td = detect_ofm_td(data, sol);
    for (std::size_t i = 0; i < 5; ++i) {
      const double expect = sd.score[i] * static_cast<double>(sol.assignment.cluster_size(i));
      CHECK(td.score[i] == doctest::Approx(expect).epsilon(1e-9));
    }
    // The argmax of td must equal the argmax of |C_i| * sd_i exactly.
    std::vector<double> scaled(5);
    for (std::size_t i = 0; i < 5; ++i)
      scaled[i] = static_cast<double>(sol.assignment.cluster_size(i)) * sd.score[i];
    int expect_index = 0;
    for (std::size_t i = 1; i < 5; ++i)
      if (scaled[i] > scaled[expect_index]) expect_index = static_cast<int>(i);
    CHECK(td.index == expect_index);
  }
}

TEST_CASE("radius detector selects the emptiest center neighborhood") {
  CoveringCase c(5);
  const OfmResult r = detect_ofm_radius(c.data, c.solution, 0.5);
  CHECK(r.index == 0);
  CHECK(r.score[0] == doctest::Approx(0.0));  // nothing near the gap center
  // Direct count against the detector's ratio for every cluster.
  for (std::size_t i = 1; i < 3; ++i) CHECK(r.score[i] > 0.0);
}

TEST_CASE("radius detector ties on identical translated clusters") {
  const Dataset data = d1({-1, 1, 99, 101});
  const LocalSolution sol = lloyd(data, c1({0, 100}));
  const OfmResult r = detect_ofm_radius(data, sol, 0.1);
  CHECK(r.score[0] == r.score[1]);
  CHECK(r.index == 0);
}

TEST_CASE("radius detector validates delta and rejects empty clusters") {
  GapCase g;
  CHECK_THROWS_AS(detect_ofm_radius(g.data, g.solution, 0.0), invalid_input);
  const Dataset data = d1({0, 1, 2, 3});
  const LocalSolution degenerate = lloyd(data, c1({1.5, 1000}));
  REQUIRE(degenerate.any_empty());
  CHECK_THROWS_AS(detect_ofm_radius(data, degenerate, 0.1), degenerate_solution);
  CHECK_THROWS_AS(detect_ofm_sd(data, degenerate), degenerate_solution);
  CHECK_THROWS_AS(detect_ofm_td(data, degenerate), degenerate_solution);
}

TEST_CASE("pd returns the closest pair with lexicographic ties") {
  CHECK(detect_mfo_pd(c1({0, 1, 10})).i == 0);
  CHECK(detect_mfo_pd(c1({0, 1, 10})).j == 1);

  // Equally spaced collinear centers: (0,1) and (1,2) tie exactly, (0,1) wins.
  const PdResult r = detect_mfo_pd(c1({0, 1, 2}));
  CHECK(r.i == 0);
  CHECK(r.j == 1);

  CHECK_THROWS_AS(detect_mfo_pd(c1({0})), invalid_input);
  CHECK_THROWS_AS(detect_mfo_pd(c1({0, 1}), 0), invalid_input);
}

TEST_CASE("pd equals an exhaustive pair scan on random center sets") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const CenterSet centers = testsupport::random_centers(6, 3, seed);
    const PdResult r = detect_mfo_pd(centers);
    int bi = 0, bj = 1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        const double dist = squared_distance(centers[i], centers[j], 3);
        if (dist < best) {
          best = dist;
          bi = i;
          bj = j;
        }
      }
    }
    CHECK(r.i == bi);
    CHECK(r.j == bj);
    CHECK(r.distance == doctest::Approx(std::sqrt(best)));
  }
}

TEST_CASE("oi prefers removing a redundant center") {
  // Two centers crowd the cluster near zero; either removal barely moves the
  // objective, so the winner comes from that pair and its partner is the twin.
  std::vector<double> xs;
  for (int i = 0; i < 20; ++i) xs.push_back(static_cast<double>(i % 5) - 2.0);
  for (int i = 0; i < 20; ++i) xs.push_back(50.0 + static_cast<double>(i % 5) - 2.0);
  const Dataset data = d1(std::move(xs));
  const LocalSolution sol = lloyd(data, c1({-0.5, 0.5, 50}));
  REQUIRE(!sol.any_empty());
  const OiResult r = detect_mfo_oi(data, sol);
  CHECK((r.removed == 0 || r.removed == 1));
  CHECK(r.nearest == (r.removed == 0 ? 1 : 0));
}

TEST_CASE("oi with k = 2 pairs the cheaper removal with the survivor") {
  const Dataset data = d1({0, 1, 9, 10});
  const LocalSolution sol = lloyd(data, c1({0.5, 9.5}));
  const OiResult r = detect_mfo_oi(data, sol);
  const int other = r.removed == 0 ? 1 : 0;
  CHECK(r.nearest == other);
  CHECK(r.removal_objective[r.removed] <= r.removal_objective[other]);
}

TEST_CASE("oi incremental objectives equal full naive recomputation") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Dataset data = testsupport::random_dataset(150, 2, seed);
    const LocalSolution sol = lloyd(data, init_kmeanspp(data, 6, seed + 3));
    if (sol.any_empty()) continue;
    const OiResult r = detect_mfo_oi(data, sol);
    for (std::size_t i = 0; i < 6; ++i) {
      std::vector<double> reduced;
      for (std::size_t j = 0; j < 6; ++j) {
        if (j == i) continue;
        reduced.insert(reduced.end(), sol.centers[j], sol.centers[j] + 2);
      }
      const double naive = ref::objective(data, CenterSet(std::move(reduced), 2));
      CHECK(r.removal_objective[i] == doctest::Approx(naive).epsilon(1e-10));
    }
  }
}

TEST_CASE("detector selections are invariant under scaling and translation") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> shift(-20.0, 20.0);
  std::uniform_real_distribution<double> scale(0.1, 8.0);
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 10; ++seed) {
    REQUIRE(seed < 60);
    const Dataset data = testsupport::random_dataset(90, 2, seed * 3);
    const LocalSolution sol = lloyd(data, init_kmeanspp(data, 4, seed));
    if (sol.any_empty()) continue;
    ++checked;

    const double s = scale(rng);
    const std::vector<double> v{shift(rng), shift(rng)};
    Dataset moved_data = data;
    const LocalSolution moved = transformed(data, sol, s, v, &moved_data);

    CHECK(detect_ofm_sd(data, sol).index == detect_ofm_sd(moved_data, moved).index);
    CHECK(detect_ofm_td(data, sol).index == detect_ofm_td(moved_data, moved).index);
    CHECK(detect_ofm_radius(data, sol, 0.1).index ==
          detect_ofm_radius(moved_data, moved, 0.1).index);
    const PdResult pd = detect_mfo_pd(sol.centers);
    const PdResult pd_moved = detect_mfo_pd(moved.centers);
    CHECK(pd.i == pd_moved.i);
    CHECK(pd.j == pd_moved.j);
    const OiResult oi = detect_mfo_oi(data, sol);
    const OiResult oi_moved = detect_mfo_oi(moved_data, moved);
    CHECK(oi.removed == oi_moved.removed);
    CHECK(oi.nearest == oi_moved.nearest);
  }
}

TEST_CASE("detector name round-trips") {
  CHECK(ofm_from_string("sd") == OfmKind::sd);
  CHECK(ofm_from_string("td") == OfmKind::td);
  CHECK(ofm_from_string("rd") == OfmKind::rd);
  CHECK(mfo_from_string("pd") == MfoKind::pd);
  CHECK(mfo_from_string("oi") == MfoKind::oi);
  CHECK_THROWS_AS(ofm_from_string("bogus"), invalid_input);
  CHECK_THROWS_AS(mfo_from_string("bogus"), invalid_input);
}

}  // TEST_SUITE
