#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cvgram/baseline.hpp"
#include "cvgram/core.hpp"
#include "cvgram/partition.hpp"

// Reproduces the centering recipe of Lindgren et al. (1994), which mixes
// whole-dataset means into per-fold centering, and quantifies how far its
// products drift from proper training-partition centering.

namespace cvgram {

/// The Lindgren-style "centered" XtX for one fold (1-based id):
/// (XtXt)_ij - N xbar_i xbar_j (2 - 1/P) + |T| xbar_i xbarT_j
///           + |T| xbar_j xbarT_i,
/// with xbar the whole-dataset column mean. Deliberately leaky.
inline Matrix lindgren_centered_xtx(const DatasetPair& data,
                                    const Partitioning& part, int fold_id) {
  if (auto err = validate_partitioning(part)) throw partition_error(*err);
  if (fold_id < 1 || fold_id > part.p)
    throw partition_error("fold id out of range");

  const ValidationIndex index = build_validation_partitions(part);
  const auto& v_rows = index.sets[static_cast<size_t>(fold_id - 1)];
  const std::vector<Index> t_rows = complement_rows(v_rows, data.n_rows());

  const Matrix xt = gather_rows(data.x(), t_rows);
  const Matrix xtx_t = xt.transpose() * xt;
  const Vector mean_global = detail::column_means(data.x());
  const Vector mean_t = detail::column_means(xt);

  const double n = static_cast<double>(data.n_rows());
  const double nt = static_cast<double>(t_rows.size());
  const double p_factor = 2.0 - 1.0 / static_cast<double>(part.p);

  Matrix out(xtx_t.rows(), xtx_t.cols());
  for (Index i = 0; i < out.rows(); ++i)
    for (Index j = 0; j < out.cols(); ++j)
      out(i, j) = xtx_t(i, j) - n * mean_global(i) * mean_global(j) * p_factor +
                  nt * mean_global(i) * mean_t(j) +
                  nt * mean_global(j) * mean_t(i);
  return out;
}

struct LeakageReport {
  // Per fold (ascending id): largest absolute entrywise difference between
  // the Lindgren product and proper training-partition centering of XtX.
  std::vector<double> per_fold_divergence;
};

inline LeakageReport leakage_divergence(const DatasetPair& data,
                                        const Partitioning& part) {
  PreprocessConfig center_x_only;
  center_x_only.center_x = true;
  const auto proper = baseline_fold_products(data, part, center_x_only);

  LeakageReport report;
  report.per_fold_divergence.reserve(static_cast<size_t>(part.p));
  for (int fold = 1; fold <= part.p; ++fold) {
    const Matrix leaky = lindgren_centered_xtx(data, part, fold);
    report.per_fold_divergence.push_back(
        (leaky - proper[static_cast<size_t>(fold - 1)].xtx_t)
            .cwiseAbs()
            .maxCoeff());
  }
  return report;
}

/// Per-fold divergence table plus the canonical one-column construction
/// where the Lindgren product is -6 while proper centering gives 2.
inline std::string format_leakage_report(const LeakageReport& report) {
  std::ostringstream os;
  os << "divergence of Lindgren-style centering from training-partition "
        "centering (max abs entry per fold)\n";
  os << "fold\tdivergence\n";
  for (size_t f = 0; f < report.per_fold_divergence.size(); ++f)
    os << (f + 1) << "\t" << report.per_fold_divergence[f] << "\n";
  os << "\ncanonical example: X = [[-1], [1], [4]], labels = [1, 1, 2]\n"
        "for the fold training on rows {1, 2}: Lindgren product = -6, "
        "proper centered product = 2, divergence = 8\n";
  return os.str();
}

}  // namespace cvgram
