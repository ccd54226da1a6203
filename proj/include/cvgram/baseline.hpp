#pragma once

#include <vector>

#include "cvgram/core.hpp"
#include "cvgram/partition.hpp"
#include "cvgram/threading.hpp"

// The oracle engine: every fold recomputes its products from an explicitly
// extracted training submatrix. Deliberately Theta(P N K (K+M)); no global
// caching happens here.

namespace cvgram {

namespace detail {

inline Vector column_means(const Matrix& m) {
  return m.colwise().sum() / static_cast<double>(m.rows());
}

// Bessel-corrected column sample standard deviations with the zero-entry
// replacement rule already applied. Requires at least 2 rows.
inline Vector sample_std(const Matrix& m, const Vector& mean) {
  const auto n = static_cast<double>(m.rows());
  Vector out(m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    double acc = 0.0;
    for (Index i = 0; i < m.rows(); ++i) {
      const double d = m(i, j) - mean(j);
      acc += d * d;
    }
    double sd = std::sqrt(acc / (n - 1.0));
    out(j) = (sd == 0.0) ? 1.0 : sd;
  }
  return out;
}

}  // namespace detail

/// One fold by direct recomputation from the extracted training submatrix.
/// Centering is applied before scaling when both are requested for a matrix.
inline FoldResult baseline_single_fold(const DatasetPair& data,
                                       const std::vector<Index>& v_rows,
                                       const PreprocessConfig& cfg,
                                       int fold_id = 0) {
  const std::vector<Index> t_rows = complement_rows(v_rows, data.n_rows());
  if (v_rows.empty() || t_rows.empty())
    throw partition_error("a fold needs both validation and training rows");
  if (cfg.any_scale() && t_rows.size() < 2)
    throw scalability_error("scaling needs at least 2 training rows");

  Matrix xt = gather_rows(data.x(), t_rows);
  Matrix yt = gather_rows(data.y(), t_rows);

  FoldStats stats;
  stats.n_train = static_cast<Index>(t_rows.size());
  stats.n_val = static_cast<Index>(v_rows.size());
  if (cfg.any()) {
    stats.mean_x_t = detail::column_means(xt);
    stats.mean_y_t = detail::column_means(yt);
  }
  if (cfg.scale_x) stats.std_x_t = detail::sample_std(xt, stats.mean_x_t);
  if (cfg.scale_y) stats.std_y_t = detail::sample_std(yt, stats.mean_y_t);

  if (cfg.center_x) xt.rowwise() -= stats.mean_x_t;
  if (cfg.center_y) yt.rowwise() -= stats.mean_y_t;
  if (cfg.scale_x) xt.array().rowwise() /= stats.std_x_t.array();
  if (cfg.scale_y) yt.array().rowwise() /= stats.std_y_t.array();

  FoldResult r;
  r.fold_id = fold_id;
  r.xtx_t = xt.transpose() * xt;
  r.xty_t = xt.transpose() * yt;
  r.stats = std::move(stats);
  return r;
}

/// Per-fold training products by direct recomputation; ascending fold order.
inline std::vector<FoldResult> baseline_fold_products(
    const DatasetPair& data, const Partitioning& part,
    const PreprocessConfig& cfg, int n_threads = 1) {
  if (part.n_rows() != data.n_rows())
    throw dimension_error("partitioning length does not match sample count");
  if (auto err = validate_partitioning(part))
    throw partition_error(*err);
  if (cfg.any_scale())
    if (auto err = check_scalable(part)) throw scalability_error(*err);

  const ValidationIndex index = build_validation_partitions(part);

  std::vector<FoldResult> results(static_cast<size_t>(part.p));
  detail::parallel_for(part.p, n_threads, [&](int fi) {
    results[static_cast<size_t>(fi)] = baseline_single_fold(
        data, index.sets[static_cast<size_t>(fi)], cfg, fi + 1);
  });
  return results;
}

}  // namespace cvgram
