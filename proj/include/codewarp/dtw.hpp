#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace codewarp {

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

// Cell cost of the DP: |q - c|.
inline double base_distance(double q, double c) { return std::fabs(q - c); }

// Plain Euclidean distance; defined only for equal lengths.
inline double euclidean_distance(std::span<const double> q, std::span<const double> c) {
  if (q.size() != c.size())
    throw std::invalid_argument("euclidean distance requires equal-length sequences");
  double acc = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    double d = q[i] - c[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

// Accumulated-cost matrix. Row i / column j correspond to q_i / c_j
// (0-based). Cells outside an active band window hold +inf.
class CostMatrix {
 public:
  CostMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, kInfiniteDistance) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

  double final_cell() const { return cells_[rows_ * cols_ - 1]; }

 private:
  std::size_t rows_, cols_;
  std::vector<double> cells_;
};

namespace detail {

inline double min3(double a, double b, double c) {
  double m = a < b ? a : b;
  return m < c ? m : c;
}

inline bool in_band(std::size_t i, std::size_t j, std::optional<std::size_t> window) {
  if (!window) return true;
  std::size_t lo = i < j ? i : j;
  std::size_t hi = i < j ? j : i;
  return hi - lo <= *window;
}

}  // namespace detail

// Fills the full accumulation matrix:
//   M[0,0] = D(q_0,c_0)
//   M[0,j] = M[0,j-1] + D(q_0,c_j)        M[i,0] = M[i-1,0] + D(q_i,c_0)
//   M[i,j] = D(q_i,c_j) + min(M[i-1,j-1], M[i-1,j], M[i,j-1])
// With a window w, cells with |i-j| > w stay +inf and drop out of the min.
// Both sequences must be non-empty (the empty cases belong to
// dtw_distance).
inline CostMatrix dtw_matrix(std::span<const double> q, std::span<const double> c,
                             std::optional<std::size_t> window = std::nullopt) {
  if (q.empty() || c.empty())
    throw std::invalid_argument("dtw_matrix requires non-empty sequences");
  const std::size_t n = q.size(), m = c.size();
  CostMatrix M(n, m);

  M(0, 0) = base_distance(q[0], c[0]);
  for (std::size_t j = 1; j < m && detail::in_band(0, j, window); ++j)
    M(0, j) = M(0, j - 1) + base_distance(q[0], c[j]);
  for (std::size_t i = 1; i < n && detail::in_band(i, 0, window); ++i)
    M(i, 0) = M(i - 1, 0) + base_distance(q[i], c[0]);

  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j_lo = 1, j_hi = m;  // [j_lo, j_hi)
    if (window) {
      j_lo = i > *window ? i - *window : 1;
      j_hi = i + *window + 1 < m ? i + *window + 1 : m;
    }
    for (std::size_t j = j_lo; j < j_hi; ++j) {
      M(i, j) = base_distance(q[i], c[j]) + detail::min3(M(i - 1, j - 1), M(i - 1, j), M(i, j - 1));
    }
  }
  return M;
}

// The FDTW distance. Two empty sequences are at distance 0; an empty
// sequence is infinitely far from any non-empty one; otherwise the final
// cell of the matrix. Runs on two rolling rows, so distance-only corpus
// sweeps never materialize the full matrix. The arithmetic is ordered
// exactly as in dtw_matrix, so both routes agree bit for bit.
inline double dtw_distance(std::span<const double> q, std::span<const double> c,
                           std::optional<std::size_t> window = std::nullopt) {
  if (q.empty() && c.empty()) return 0.0;
  if (q.empty() || c.empty()) return kInfiniteDistance;
  const std::size_t n = q.size(), m = c.size();

  std::vector<double> prev(m, kInfiniteDistance), cur(m, kInfiniteDistance);
  prev[0] = base_distance(q[0], c[0]);
  for (std::size_t j = 1; j < m && detail::in_band(0, j, window); ++j)
    prev[j] = prev[j - 1] + base_distance(q[0], c[j]);

  for (std::size_t i = 1; i < n; ++i) {
    std::fill(cur.begin(), cur.end(), kInfiniteDistance);
    if (detail::in_band(i, 0, window)) cur[0] = prev[0] + base_distance(q[i], c[0]);
    std::size_t j_lo = 1, j_hi = m;
    if (window) {
      j_lo = i > *window ? i - *window : 1;
      j_hi = i + *window + 1 < m ? i + *window + 1 : m;
    }
    for (std::size_t j = j_lo; j < j_hi; ++j) {
      cur[j] = base_distance(q[i], c[j]) + detail::min3(prev[j - 1], prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[m - 1];
}

// One point of the warp path, 1-based as in the path definition
// w_k = (i, j), 1 <= i <= |Q|, 1 <= j <= |C|.
struct PathPoint {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const PathPoint&, const PathPoint&) = default;
};

struct WarpPath {
  std::vector<PathPoint> points;

  std::size_t length() const noexcept { return points.size(); }
};

// Backtracks the minimal alignment from (n,m) to (1,1). Ties go diagonal
// first, then up, then left, which maximizes diagonal runs for
// subsequence detection. The summed base distances along the result equal
// the final cell of the matrix.
inline WarpPath warp_path(const CostMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0)
    throw std::invalid_argument("warp path requires a non-empty matrix");
  if (!std::isfinite(M.final_cell()))
    throw std::invalid_argument("warp path undefined: final cell is not finite");

  std::vector<PathPoint> rev;
  std::size_t i = M.rows() - 1, j = M.cols() - 1;
  rev.push_back({i + 1, j + 1});
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      double diag = M(i - 1, j - 1), up = M(i - 1, j), left = M(i, j - 1);
      if (diag <= up && diag <= left) {
        --i;
        --j;
      } else if (up <= left) {
        --i;
      } else {
        --j;
      }
    }
    rev.push_back({i + 1, j + 1});
  }
  WarpPath path;
  path.points.assign(rev.rbegin(), rev.rend());
  return path;
}

}  // namespace codewarp
