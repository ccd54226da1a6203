#pragma once

#include <vector>

#include "cvgram/core.hpp"
#include "cvgram/partition.hpp"
#include "cvgram/threading.hpp"

// The fast engine: one pass over the whole dataset, then each fold removes
// the validation rows' contribution from the cached products and statistics.
// Total work is proportional to computing XtX and XtY once, independent of
// the fold count.

namespace cvgram {

/// Whole-dataset products and the statistic vectors the configuration needs.
/// Mean and sum vectors are filled when any flag is set (scaling reconstructs
/// stds from means), sum-of-squares vectors only when a scale flag is set.
inline GlobalCache precompute_global(const DatasetPair& data,
                                     const PreprocessConfig& cfg) {
  GlobalCache cache;
  cache.n_rows = data.n_rows();
  cache.xtx = data.x().transpose() * data.x();
  cache.xty = data.x().transpose() * data.y();
  if (cfg.any()) {
    cache.sum_x = data.x().colwise().sum();
    cache.sum_y = data.y().colwise().sum();
    cache.mean_x = cache.sum_x / static_cast<double>(cache.n_rows);
    cache.mean_y = cache.sum_y / static_cast<double>(cache.n_rows);
  }
  if (cfg.any_scale()) {
    cache.sum_sq_x = data.x().array().square().colwise().sum().matrix();
    cache.sum_sq_y = data.y().array().square().colwise().sum().matrix();
  }
  return cache;
}

/// Training-partition mean from the global and validation means:
/// (n / (n - n_val)) * global_mean - (n_val / (n - n_val)) * val_mean.
inline Vector training_mean(const Vector& global_mean, const Vector& val_mean,
                            Index n, Index n_val) {
  if (n_val >= n)
    throw std::invalid_argument("training_mean: validation rows cover the dataset");
  const double nt = static_cast<double>(n - n_val);
  return (static_cast<double>(n) / nt) * global_mean -
         (static_cast<double>(n_val) / nt) * val_mean;
}

/// Bessel-corrected training std from training-partition sums:
/// sqrt((1/(n-1)) * (-2 m.*s + n m.^2 + q)) element-wise. Round-off can push
/// the radicand slightly negative for near-constant columns; it is clamped
/// to 0 and the resulting 0 entries are then replaced by 1.
inline Vector training_std(const Vector& mean_t, const Vector& sum_t,
                           const Vector& sum_sq_t, Index n_train) {
  if (n_train < 2)
    throw scalability_error("training_std: need at least 2 training rows");
  const double scale = 1.0 / static_cast<double>(n_train - 1);
  Vector out(mean_t.size());
  for (Index j = 0; j < mean_t.size(); ++j) {
    double radicand =
        scale * (-2.0 * mean_t(j) * sum_t(j) +
                 static_cast<double>(n_train) * mean_t(j) * mean_t(j) +
                 sum_sq_t(j));
    if (radicand < 0.0) radicand = 0.0;
    const double sd = std::sqrt(radicand);
    out(j) = (sd == 0.0) ? 1.0 : sd;
  }
  return out;
}

/// Training products for one fold, reading only the validation rows and the
/// global cache. v_rows must be sorted ascending, nonempty and proper.
inline FoldResult fold_products(const GlobalCache& cache, const DatasetPair& data,
                                const std::vector<Index>& v_rows,
                                const PreprocessConfig& cfg, int fold_id = 0) {
  const Index n = cache.n_rows;
  const auto n_val = static_cast<Index>(v_rows.size());
  if (n_val == 0) throw std::invalid_argument("fold_products: empty validation partition");
  if (n_val >= n) throw std::invalid_argument("fold_products: degenerate fold covers all rows");
  const Index n_train = n - n_val;
  if (cfg.any_scale() && n_train < 2)
    throw scalability_error("fold_products: scaling needs at least 2 training rows");

  const Matrix xv = gather_rows(data.x(), v_rows);
  const Matrix yv = gather_rows(data.y(), v_rows);

  FoldResult r;
  r.fold_id = fold_id;
  r.stats.n_train = n_train;
  r.stats.n_val = n_val;
  r.xtx_t = cache.xtx - xv.transpose() * xv;
  r.xty_t = cache.xty - xv.transpose() * yv;

  if (cfg.any()) {
    const Vector mean_x_v = xv.colwise().sum() / static_cast<double>(n_val);
    const Vector mean_y_v = yv.colwise().sum() / static_cast<double>(n_val);
    r.stats.mean_x_t = training_mean(cache.mean_x, mean_x_v, n, n_val);
    r.stats.mean_y_t = training_mean(cache.mean_y, mean_y_v, n, n_val);
  }

  // Outer products are formed first and multiplied by |T| afterwards; this
  // ordering is the more numerically stable of the two.
  const double nt = static_cast<double>(n_train);
  if (cfg.center_x)
    r.xtx_t -= nt * Matrix(r.stats.mean_x_t.transpose() * r.stats.mean_x_t);
  if (cfg.any_center())
    r.xty_t -= nt * Matrix(r.stats.mean_x_t.transpose() * r.stats.mean_y_t);

  if (cfg.scale_x) {
    const Vector sum_x_t = cache.sum_x - xv.colwise().sum();
    const Vector sum_sq_x_t =
        cache.sum_sq_x - Vector(xv.array().square().colwise().sum().matrix());
    r.stats.std_x_t = training_std(r.stats.mean_x_t, sum_x_t, sum_sq_x_t, n_train);
    r.xtx_t = hadamard_outer_divide(r.xtx_t, r.stats.std_x_t, r.stats.std_x_t);
  }
  if (cfg.scale_y) {
    const Vector sum_y_t = cache.sum_y - yv.colwise().sum();
    const Vector sum_sq_y_t =
        cache.sum_sq_y - Vector(yv.array().square().colwise().sum().matrix());
    r.stats.std_y_t = training_std(r.stats.mean_y_t, sum_y_t, sum_sq_y_t, n_train);
  }
  if (cfg.any_scale()) {
    const Vector ones_k = Vector::Ones(r.xty_t.rows());
    const Vector ones_m = Vector::Ones(r.xty_t.cols());
    r.xty_t = hadamard_outer_divide(r.xty_t,
                                    cfg.scale_x ? r.stats.std_x_t : ones_k,
                                    cfg.scale_y ? r.stats.std_y_t : ones_m);
  }
  return r;
}

/// One global precomputation, then fold_products per fold; ascending order.
inline std::vector<FoldResult> run_all_folds(const DatasetPair& data,
                                             const Partitioning& part,
                                             const PreprocessConfig& cfg,
                                             int n_threads = 1) {
  if (part.n_rows() != data.n_rows())
    throw dimension_error("partitioning length does not match sample count");
  if (auto err = validate_partitioning(part)) throw partition_error(*err);
  if (cfg.any_scale())
    if (auto err = check_scalable(part)) throw scalability_error(*err);

  const GlobalCache cache = precompute_global(data, cfg);
  const ValidationIndex index = build_validation_partitions(part);

  std::vector<FoldResult> results(static_cast<size_t>(part.p));
  detail::parallel_for(part.p, n_threads, [&](int fi) {
    results[static_cast<size_t>(fi)] =
        fold_products(cache, data, index.sets[static_cast<size_t>(fi)], cfg, fi + 1);
  });
  return results;
}

}  // namespace cvgram
