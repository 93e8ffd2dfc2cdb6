#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "codewarp/dtw.hpp"
#include "codewarp/encode.hpp"

namespace codewarp {

struct LineRange {
  std::size_t first = 0;
  std::size_t last = 0;

  friend bool operator==(const LineRange&, const LineRange&) = default;
};

// A diagonal-parallel run of the warp path: contiguous equal-length index
// ranges in both sequences. Ranges are 1-based inclusive.
struct SubsequenceMatch {
  std::size_t q_begin = 0, q_end = 0;
  std::size_t c_begin = 0, c_end = 0;
  std::size_t length = 0;
  double mean_deviation = 0.0;
  double mean_cost = 0.0;
  bool has_lines = false;
  LineRange q_lines, c_lines;
};

struct MatchParams {
  std::size_t min_run_length = 5;
  double max_deviation = std::numeric_limits<double>::infinity();
  double max_mean_cost = std::numeric_limits<double>::infinity();
};

// Distance of path point (i, j) from the main diagonal, rescaled by m/n
// so unequal lengths still have a diagonal; |i - j| when n = m.
inline double deviation(std::size_t i, std::size_t j, std::size_t n, std::size_t m) {
  if (n == 0) throw std::invalid_argument("deviation requires a non-empty query sequence");
  double slope = static_cast<double>(m) / static_cast<double>(n);
  return std::fabs(static_cast<double>(j) - static_cast<double>(i) * slope);
}

// Partitions the warp path points into maximal chains connected by pure
// diagonal steps, unfiltered and in path order. Points touching no
// diagonal step form length-1 runs. Concatenating the runs reproduces the
// diagonal-step subset of the path exactly.
inline std::vector<SubsequenceMatch> diagonal_runs(const WarpPath& path,
                                                   std::span<const double> q,
                                                   std::span<const double> c) {
  std::vector<SubsequenceMatch> runs;
  const auto& pts = path.points;
  const std::size_t n = q.size(), m = c.size();

  std::size_t k = 0;
  while (k < pts.size()) {
    std::size_t end = k;
    while (end + 1 < pts.size() && pts[end + 1].i == pts[end].i + 1 &&
           pts[end + 1].j == pts[end].j + 1) {
      ++end;
    }
    SubsequenceMatch run;
    run.q_begin = pts[k].i;
    run.q_end = pts[end].i;
    run.c_begin = pts[k].j;
    run.c_end = pts[end].j;
    run.length = end - k + 1;
    double cost = 0.0, dev = 0.0;
    for (std::size_t t = k; t <= end; ++t) {
      cost += base_distance(q[pts[t].i - 1], c[pts[t].j - 1]);
      dev += deviation(pts[t].i, pts[t].j, n, m);
    }
    run.mean_cost = cost / static_cast<double>(run.length);
    run.mean_deviation = dev / static_cast<double>(run.length);
    runs.push_back(run);
    k = end + 1;
  }
  return runs;
}

// Keeps runs with length >= min_run_length, mean deviation <= max_deviation,
// and mean cost <= max_mean_cost, sorted by ascending mean cost, ties by
// descending length. Runs never overlap (they partition the path).
inline std::vector<SubsequenceMatch> detect_matches(const WarpPath& path,
                                                    std::span<const double> q,
                                                    std::span<const double> c,
                                                    const MatchParams& params = {}) {
  if (params.min_run_length < 1)
    throw std::invalid_argument("min_run_length must be at least 1");
  std::vector<SubsequenceMatch> kept;
  for (const auto& run : diagonal_runs(path, q, c)) {
    if (run.length >= params.min_run_length && run.mean_deviation <= params.max_deviation &&
        run.mean_cost <= params.max_mean_cost) {
      kept.push_back(run);
    }
  }
  std::stable_sort(kept.begin(), kept.end(), [](const SubsequenceMatch& a, const SubsequenceMatch& b) {
    if (a.mean_cost != b.mean_cost) return a.mean_cost < b.mean_cost;
    return a.length > b.length;
  });
  return kept;
}

// Fills q_lines/c_lines from per-element provenance: the match collapses
// to a first-line..last-line range in each file.
inline SubsequenceMatch map_to_source(SubsequenceMatch match, std::span<const Provenance> q_prov,
                                      std::span<const Provenance> c_prov) {
  if (match.q_end > q_prov.size() || match.c_end > c_prov.size() || match.q_begin == 0 ||
      match.c_begin == 0) {
    throw std::out_of_range("match indices do not fit the given provenance");
  }
  match.q_lines = {q_prov[match.q_begin - 1].span.line, q_prov[match.q_end - 1].span.line};
  match.c_lines = {c_prov[match.c_begin - 1].span.line, c_prov[match.c_end - 1].span.line};
  match.has_lines = true;
  return match;
}

}  // namespace codewarp
