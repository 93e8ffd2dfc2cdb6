#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "codewarp/dtw.hpp"
#include "codewarp/subseq.hpp"
#include "support/gen.hpp"

using namespace codewarp;

namespace {

WarpPath path_for(const std::vector<double>& q, const std::vector<double>& c) {
  return warp_path(dtw_matrix(q, c));
}

}  // namespace

TEST_CASE("deviation measures rescaled distance from the main diagonal") {
  CHECK(deviation(3, 3, 7, 7) == 0.0);
  CHECK(deviation(5, 5, 9, 9) == 0.0);
  CHECK(deviation(3, 5, 9, 9) == 2.0);
  CHECK(deviation(2, 4, 4, 8) == 0.0);
  CHECK(deviation(2, 5, 4, 8) == 1.0);
  CHECK_THROWS_AS(deviation(1, 1, 0, 5), std::invalid_argument);
}

TEST_CASE("identical sequences yield one whole-cover match") {
  std::vector<double> q{600, 100, 100, 500, 300, 600, 700};
  auto matches = detect_matches(path_for(q, q), q, q, {.min_run_length = 5});
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].q_begin == 1);
  CHECK(matches[0].q_end == q.size());
  CHECK(matches[0].c_begin == 1);
  CHECK(matches[0].c_end == q.size());
  CHECK(matches[0].length == q.size());
  CHECK(matches[0].mean_cost == 0.0);
  CHECK(matches[0].mean_deviation == 0.0);
}

TEST_CASE("a single-element identity still produces its trivial match") {
  std::vector<double> q{42};
  auto matches = detect_matches(path_for(q, q), q, q, {.min_run_length = 1});
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].length == 1);
  CHECK(matches[0].q_begin == 1);
  CHECK(matches[0].q_end == 1);
}

TEST_CASE("paths without long diagonal runs produce no matches") {
  std::vector<double> q{0}, c{0, 1, 2, 3};
  auto matches = detect_matches(path_for(q, c), q, c, {.min_run_length = 5});
  CHECK(matches.empty());
}

TEST_CASE("min_run_length below one is rejected") {
  std::vector<double> q{1, 2};
  CHECK_THROWS_AS(detect_matches(path_for(q, q), q, q, {.min_run_length = 0}),
                  std::invalid_argument);
}

TEST_CASE("a shared block flanked by band-separated context is covered") {
  // Q = A ++ S, C = B ++ S: contexts in different bands, S shared.
  std::vector<double> shared{603, 201, 604, 101, 503, 605, 202, 102, 601, 504};
  std::vector<double> q, c;
  for (int k = 0; k < 10; ++k) q.push_back(101 + k);
  for (int k = 0; k < 10; ++k) c.push_back(901 + k);
  q.insert(q.end(), shared.begin(), shared.end());
  c.insert(c.end(), shared.begin(), shared.end());

  auto matches = detect_matches(path_for(q, c), q, c, {.min_run_length = 5});
  bool covered = false;
  for (const auto& m : matches) {
    if (m.q_begin <= 12 && m.q_end >= 19 && m.c_begin <= 12 && m.c_end >= 19) covered = true;
  }
  CHECK(covered);
}

TEST_CASE("runs partition the path and reproduce its diagonal steps") {
  std::mt19937 rng(31);
  for (int round = 0; round < 60; ++round) {
    auto q = gen::random_sequence(rng, 1, 25, 0, 4);
    auto c = gen::random_sequence(rng, 1, 25, 0, 4);
    auto path = path_for(q, c);
    auto runs = diagonal_runs(path, q, c);

    // every path point lands in exactly one run
    std::size_t covered = 0;
    for (const auto& r : runs) covered += r.length;
    CHECK(covered == path.length());

    // the runs' internal steps are exactly the diagonal steps of the path
    std::size_t diag_steps = 0;
    for (std::size_t k = 1; k < path.points.size(); ++k) {
      if (path.points[k].i == path.points[k - 1].i + 1 &&
          path.points[k].j == path.points[k - 1].j + 1)
        ++diag_steps;
    }
    std::size_t run_steps = 0;
    for (const auto& r : runs) run_steps += r.length - 1;
    CHECK(run_steps == diag_steps);

    for (const auto& r : runs) {
      CHECK(r.q_end - r.q_begin == r.c_end - r.c_begin);
      CHECK(r.length == r.q_end - r.q_begin + 1);
      CHECK(r.mean_cost >= 0.0);
      CHECK(r.mean_deviation >= 0.0);
    }
  }
}

TEST_CASE("filtering is monotone in the thresholds") {
  std::mt19937 rng(77);
  for (int round = 0; round < 40; ++round) {
    auto q = gen::random_sequence(rng, 2, 30, 0, 3);
    auto c = gen::random_sequence(rng, 2, 30, 0, 3);
    auto path = path_for(q, c);
    auto loose = detect_matches(path, q, c, {.min_run_length = 2, .max_deviation = 5.0});
    auto tighter_run = detect_matches(path, q, c, {.min_run_length = 4, .max_deviation = 5.0});
    auto tighter_dev = detect_matches(path, q, c, {.min_run_length = 2, .max_deviation = 1.0});
    CHECK(tighter_run.size() <= loose.size());
    CHECK(tighter_dev.size() <= loose.size());
  }
}

TEST_CASE("mean cost never exceeds the largest element cost of the run") {
  std::mt19937 rng(123);
  for (int round = 0; round < 40; ++round) {
    auto q = gen::random_sequence(rng, 2, 20);
    auto c = gen::random_sequence(rng, 2, 20);
    auto path = path_for(q, c);
    for (const auto& r : diagonal_runs(path, q, c)) {
      double max_cost = 0.0;
      for (std::size_t k = 0; k < r.length; ++k) {
        max_cost = std::max(max_cost, base_distance(q[r.q_begin - 1 + k], c[r.c_begin - 1 + k]));
      }
      CHECK(r.mean_cost <= max_cost + 1e-12);
    }
  }
}

TEST_CASE("matches sort by mean cost, then by length") {
  // two clean diagonal runs separated by a vertical wiggle; the second
  // run is cheaper and must come first
  std::vector<double> q{0, 0, 0, 0, 0, 9, 5, 5, 5, 5, 5};
  std::vector<double> c{0.5, 0.5, 0.5, 0.5, 0.5, 9, 9, 5, 5, 5, 5, 5};
  auto path = path_for(q, c);
  auto matches = detect_matches(path, q, c, {.min_run_length = 3});
  REQUIRE(matches.size() >= 2);
  for (std::size_t k = 1; k < matches.size(); ++k) {
    bool ordered = matches[k - 1].mean_cost < matches[k].mean_cost ||
                   (matches[k - 1].mean_cost == matches[k].mean_cost &&
                    matches[k - 1].length >= matches[k].length);
    CHECK(ordered);
  }
  CHECK(matches[0].mean_cost <= matches[1].mean_cost);
}

TEST_CASE("map_to_source collapses matches to line ranges") {
  std::vector<Provenance> q_prov = {
      {"=", {4, 3, 30, 1}}, {"+", {4, 9, 36, 1}}, {"<", {5, 7, 50, 1}}};
  std::vector<Provenance> c_prov = {
      {"=", {2, 1, 10, 1}}, {"+", {3, 1, 20, 1}}, {"<", {9, 1, 90, 1}}};
  SubsequenceMatch m;
  m.q_begin = 1;
  m.q_end = 3;
  m.c_begin = 1;
  m.c_end = 3;
  m.length = 3;
  auto mapped = map_to_source(m, q_prov, c_prov);
  REQUIRE(mapped.has_lines);
  CHECK(mapped.q_lines == LineRange{4, 5});
  CHECK(mapped.c_lines == LineRange{2, 9});

  SubsequenceMatch bad = m;
  bad.q_end = 9;
  CHECK_THROWS_AS(map_to_source(bad, q_prov, c_prov), std::out_of_range);
  CHECK_THROWS_AS(map_to_source(m, {}, c_prov), std::out_of_range);
}
