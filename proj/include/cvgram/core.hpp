#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

// Core types shared by every engine. All matrices are dense, row-major,
// 64-bit floating point. Types are immutable after construction and safe
// to share across concurrent readers.

namespace cvgram {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::RowVectorXd;
using Index = Eigen::Index;

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct partition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when scaling is requested but some training partition has fewer
// than two rows, so the sample standard deviation is undefined.
struct scalability_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The X (N x K) and Y (N x M) data matrices, one sample per row.
class DatasetPair {
 public:
  DatasetPair(Matrix x, Matrix y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.rows() != y_.rows())
      throw dimension_error("x and y must have the same number of rows");
    if (x_.rows() < 2) throw dimension_error("need at least 2 samples");
    if (x_.cols() < 1 || y_.cols() < 1)
      throw dimension_error("x and y must each have at least one column");
    if (!x_.allFinite() || !y_.allFinite())
      throw dimension_error("x and y entries must be finite");
  }

  const Matrix& x() const { return x_; }
  const Matrix& y() const { return y_; }
  Index n_rows() const { return x_.rows(); }
  Index n_features() const { return x_.cols(); }
  Index n_responses() const { return y_.cols(); }

 private:
  Matrix x_;
  Matrix y_;
};

/// Length-N fold-label sequence. Labels are 1-based, values in {1..p}.
struct Partitioning {
  std::vector<int> labels;
  int p = 0;

  Index n_rows() const { return static_cast<Index>(labels.size()); }
};

/// Four independent preprocessing flags; all 16 combinations are valid.
struct PreprocessConfig {
  bool center_x = false;
  bool center_y = false;
  bool scale_x = false;
  bool scale_y = false;

  bool any_center() const { return center_x || center_y; }
  bool any_scale() const { return scale_x || scale_y; }
  bool any() const { return any_center() || any_scale(); }

  bool operator==(const PreprocessConfig&) const = default;
};

// Whole-dataset aggregates computed once by the fast engine. Both sums and
// means are stored so the per-fold downdates read exactly the quantity they
// need. Vectors a configuration does not require are left empty.
struct GlobalCache {
  Matrix xtx;       // K x K
  Matrix xty;       // K x M
  Vector mean_x;    // length K
  Vector mean_y;    // length M
  Vector sum_x;     // length K
  Vector sum_y;     // length M
  Vector sum_sq_x;  // length K, column-wise sums of squares
  Vector sum_sq_y;  // length M
  Index n_rows = 0;
};

// Training-partition statistics actually used for one fold. Mean vectors are
// populated when any preprocessing flag is set, std vectors only when the
// corresponding side is scaled (zero entries already replaced by 1).
struct FoldStats {
  Vector mean_x_t;
  Vector mean_y_t;
  Vector std_x_t;
  Vector std_y_t;
  Index n_train = 0;
  Index n_val = 0;
};

struct FoldResult {
  int fold_id = 0;
  Matrix xtx_t;  // K x K
  Matrix xty_t;  // K x M
  FoldStats stats;
};

/// Entry (i,j) of the result is m(i,j) / (left(i) * right(j)). The divisor
/// outer product is never materialized.
inline Matrix hadamard_outer_divide(const Matrix& m, const Vector& left,
                                    const Vector& right) {
  if (left.size() != m.rows() || right.size() != m.cols())
    throw dimension_error("divisor vector lengths must match matrix shape");
  for (Index i = 0; i < left.size(); ++i)
    if (!(left(i) > 0.0))
      throw std::invalid_argument("hadamard_outer_divide: non-positive left divisor");
  for (Index j = 0; j < right.size(); ++j)
    if (!(right(j) > 0.0))
      throw std::invalid_argument("hadamard_outer_divide: non-positive right divisor");
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) / (left(i) * right(j));
  return out;
}

/// Largest entrywise relative difference, |a-b| / max(|a|, |b|, floor).
inline double max_rel_diff(const Matrix& a, const Matrix& b,
                           double floor = 1e-30) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("max_rel_diff: shape mismatch");
  double worst = 0.0;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      const double denom =
          std::max({std::abs(a(i, j)), std::abs(b(i, j)), floor});
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / denom);
    }
  return worst;
}

inline double max_rel_diff(const Vector& a, const Vector& b,
                           double floor = 1e-30) {
  return max_rel_diff(Matrix(a), Matrix(b), floor);
}

/// Relative Frobenius distance, ||a-b||_F / max(||a||_F, ||b||_F, floor).
inline double rel_frobenius_dist(const Matrix& a, const Matrix& b,
                                 double floor = 1e-30) {
  return (a - b).norm() / std::max({a.norm(), b.norm(), floor});
}

}  // namespace cvgram
