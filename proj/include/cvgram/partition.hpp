#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvgram/core.hpp"

// Validity and scalability predicates on partitionings, plus the single-pass
// construction of per-fold validation row sets.

namespace cvgram {

// Row indices of each validation partition, 0-based and sorted ascending.
// sets[p-1] holds the rows of fold p (fold ids stay 1-based externally).
struct ValidationIndex {
  std::vector<std::vector<Index>> sets;
};

/// Empty optional means ok; otherwise the first violated clause.
inline std::optional<std::string> validate_partitioning(
    const std::vector<int>& labels, int p) {
  const auto n = static_cast<Index>(labels.size());
  if (p < 2) return "fold count must be at least 2, got " + std::to_string(p);
  if (static_cast<Index>(p) > n)
    return "fold count " + std::to_string(p) + " exceeds sample count " +
           std::to_string(n);
  std::vector<char> seen(static_cast<size_t>(p), 0);
  for (Index i = 0; i < n; ++i) {
    const int label = labels[static_cast<size_t>(i)];
    if (label < 1 || label > p)
      return "label " + std::to_string(label) + " at sample " +
             std::to_string(i + 1) + " is outside {1.." + std::to_string(p) +
             "}";
    seen[static_cast<size_t>(label - 1)] = 1;
  }
  for (int f = 1; f <= p; ++f)
    if (!seen[static_cast<size_t>(f - 1)])
      return "fold " + std::to_string(f) + " is empty";
  return std::nullopt;
}

inline std::optional<std::string> validate_partitioning(const Partitioning& part) {
  return validate_partitioning(part.labels, part.p);
}

/// Ok iff every training partition has at least 2 rows.
inline std::optional<std::string> check_scalable(const Partitioning& part) {
  const Index n = part.n_rows();
  std::vector<Index> val_sizes(static_cast<size_t>(part.p), 0);
  for (int label : part.labels) ++val_sizes[static_cast<size_t>(label - 1)];
  for (int f = 1; f <= part.p; ++f)
    if (n - val_sizes[static_cast<size_t>(f - 1)] < 2)
      return "fold " + std::to_string(f) + " leaves a training partition of " +
             std::to_string(n - val_sizes[static_cast<size_t>(f - 1)]) +
             " rows; scaling needs at least 2";
  return std::nullopt;
}

/// One pass over the labels; time proportional to N.
inline ValidationIndex build_validation_partitions(const Partitioning& part) {
  ValidationIndex index;
  index.sets.resize(static_cast<size_t>(part.p));
  for (Index n = 0; n < part.n_rows(); ++n)
    index.sets[static_cast<size_t>(part.labels[static_cast<size_t>(n)] - 1)]
        .push_back(n);
  return index;
}

/// Rows not in v_rows, ascending. v_rows must be sorted ascending.
inline std::vector<Index> complement_rows(const std::vector<Index>& v_rows,
                                          Index n) {
  std::vector<Index> t_rows;
  t_rows.reserve(static_cast<size_t>(n) - v_rows.size());
  size_t next = 0;
  for (Index i = 0; i < n; ++i) {
    if (next < v_rows.size() && v_rows[next] == i)
      ++next;
    else
      t_rows.push_back(i);
  }
  return t_rows;
}

inline Matrix gather_rows(const Matrix& src, const std::vector<Index>& rows) {
  Matrix out(static_cast<Index>(rows.size()), src.cols());
  for (size_t i = 0; i < rows.size(); ++i)
    out.row(static_cast<Index>(i)) = src.row(rows[i]);
  return out;
}

}  // namespace cvgram
