#pragma once

#include <array>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cvgram/core.hpp"
#include "cvgram/fast.hpp"

// Enumerates the 16 preprocessing configurations and certifies, on concrete
// data, which of them produce identical fold products. Generic data yields
// 8 distinct XtY products and 12 distinct (XtX, XtY) pairs; pre-centered or
// pre-scaled inputs can merge classes, which is reported rather than failed.

namespace cvgram {

struct ComboClassReport {
  std::vector<PreprocessConfig> configs;  // the 16, canonical order
  std::array<int, 16> xty_class{};        // class id per config, 0-based
  std::array<int, 16> pair_class{};
  int n_xty_classes = 0;
  int n_pair_classes = 0;
  double min_xty_separation = 0.0;   // smallest cross-class xty distance
  double min_pair_separation = 0.0;  // smallest cross-class pair distance
  double tol = 0.0;
  bool degenerate = false;  // class counts differ from 8 / 12
};

/// All 2^4 flag combinations, ordered as a 4-bit counter over
/// (center_x, center_y, scale_x, scale_y), all-off first.
inline std::vector<PreprocessConfig> enumerate_configs() {
  std::vector<PreprocessConfig> configs;
  configs.reserve(16);
  for (int bits = 0; bits < 16; ++bits) {
    PreprocessConfig cfg;
    cfg.center_x = (bits & 8) != 0;
    cfg.center_y = (bits & 4) != 0;
    cfg.scale_x = (bits & 2) != 0;
    cfg.scale_y = (bits & 1) != 0;
    configs.push_back(cfg);
  }
  return configs;
}

namespace detail {

// Distance between two configs' runs: the worst per-fold relative Frobenius
// distance over the chosen matrices.
inline double run_dist_xty(const std::vector<FoldResult>& a,
                           const std::vector<FoldResult>& b) {
  double worst = 0.0;
  for (size_t f = 0; f < a.size(); ++f)
    worst = std::max(worst, rel_frobenius_dist(a[f].xty_t, b[f].xty_t));
  return worst;
}

inline double run_dist_pair(const std::vector<FoldResult>& a,
                            const std::vector<FoldResult>& b) {
  double worst = run_dist_xty(a, b);
  for (size_t f = 0; f < a.size(); ++f)
    worst = std::max(worst, rel_frobenius_dist(a[f].xtx_t, b[f].xtx_t));
  return worst;
}

template <typename Dist>
inline int group_classes(const std::vector<std::vector<FoldResult>>& runs,
                         double tol, Dist dist, std::array<int, 16>& out,
                         double& min_separation) {
  std::vector<int> reps;  // config index representing each class
  min_separation = std::numeric_limits<double>::infinity();
  for (int c = 0; c < 16; ++c) {
    int assigned = -1;
    for (size_t k = 0; k < reps.size(); ++k) {
      const double d = dist(runs[static_cast<size_t>(c)],
                            runs[static_cast<size_t>(reps[k])]);
      if (d <= tol && assigned < 0) {
        assigned = static_cast<int>(k);
      } else if (d > tol) {
        min_separation = std::min(min_separation, d);
      }
    }
    if (assigned < 0) {
      assigned = static_cast<int>(reps.size());
      reps.push_back(c);
    }
    out[static_cast<size_t>(c)] = assigned;
  }
  if (reps.size() <= 1) min_separation = 0.0;
  return static_cast<int>(reps.size());
}

}  // namespace detail

/// Runs the fast engine for every configuration and groups configurations
/// whose fold products agree entrywise within tol.
inline ComboClassReport classify_combos(const DatasetPair& data,
                                        const Partitioning& part,
                                        double tol = 1e-9) {
  if (auto err = check_scalable(part)) throw scalability_error(*err);

  ComboClassReport report;
  report.configs = enumerate_configs();
  report.tol = tol;

  std::vector<std::vector<FoldResult>> runs;
  runs.reserve(16);
  for (const auto& cfg : report.configs)
    runs.push_back(run_all_folds(data, part, cfg));

  report.n_xty_classes =
      detail::group_classes(runs, tol, detail::run_dist_xty, report.xty_class,
                            report.min_xty_separation);
  report.n_pair_classes =
      detail::group_classes(runs, tol, detail::run_dist_pair, report.pair_class,
                            report.min_pair_separation);
  report.degenerate = report.n_xty_classes != 8 || report.n_pair_classes != 12;
  return report;
}

/// Plain-text grid: rows = centering choice, columns = scaling choice,
/// cell = XtY class id. Pair class ids follow in a second grid.
inline std::string format_combo_table(const ComboClassReport& report) {
  static const char* center_names[4] = {"no centering", "center X", "center Y",
                                        "center both"};
  static const char* scale_names[4] = {"no scaling", "scale X", "scale Y",
                                       "scale both"};
  auto config_index = [](int ci, int si) {
    const int cx = (ci == 1 || ci == 3) ? 1 : 0;
    const int cy = (ci == 2 || ci == 3) ? 1 : 0;
    const int sx = (si == 1 || si == 3) ? 1 : 0;
    const int sy = (si == 2 || si == 3) ? 1 : 0;
    return (cx << 3) | (cy << 2) | (sx << 1) | sy;
  };
  std::ostringstream os;
  auto grid = [&](const char* title, const std::array<int, 16>& cls) {
    os << title << "\n";
    os << "centering \\ scaling";
    for (auto* s : scale_names) os << "\t" << s;
    os << "\n";
    for (int ci = 0; ci < 4; ++ci) {
      os << center_names[ci];
      for (int si = 0; si < 4; ++si)
        os << "\t" << cls[static_cast<size_t>(config_index(ci, si))];
      os << "\n";
    }
  };
  grid("XtY classes", report.xty_class);
  os << "\n";
  grid("(XtX, XtY) pair classes", report.pair_class);
  os << "\ndistinct XtY classes: " << report.n_xty_classes
     << "\ndistinct pair classes: " << report.n_pair_classes
     << "\nmin inter-class separation (xty): " << report.min_xty_separation
     << "\nmin inter-class separation (pair): " << report.min_pair_separation
     << "\ntolerance: " << report.tol << "\n";
  if (report.degenerate)
    os << "warning: class counts are degenerate for this input; expected 8 "
          "xty and 12 pair classes\n";
  return os.str();
}

}  // namespace cvgram
