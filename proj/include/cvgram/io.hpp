#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cvgram/core.hpp"

// Flat-file formats: headerless CSV matrices (one sample per row, full
// round-trip precision) and plain-text partition files (one 1-based fold
// label per line).

namespace cvgram {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that round-trips a double (17 significant digits).
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write_matrix_csv(const std::string& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  if (!out) throw io_error("write failed: " + path);
}

inline Matrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw io_error("bad number '" + cell + "' in " + path);
      }
      while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
      if (used != cell.size())
        throw io_error("bad number '" + cell + "' in " + path);
      row.push_back(v);
    }
    if (row.empty()) throw io_error("empty row in " + path);
    if (!rows.empty() && row.size() != rows.front().size())
      throw io_error("ragged rows in " + path);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw io_error("empty matrix file: " + path);
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.front().size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return m;
}

/// One integer fold label per line; fold count is the largest label seen.
inline Partitioning read_partition_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open: " + path);
  Partitioning part;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t used = 0;
    int label = 0;
    try {
      label = std::stoi(line, &used);
    } catch (const std::exception&) {
      throw io_error("bad fold label '" + line + "' in " + path);
    }
    while (used < line.size() && std::isspace(static_cast<unsigned char>(line[used]))) ++used;
    if (used != line.size())
      throw io_error("bad fold label '" + line + "' in " + path);
    part.labels.push_back(label);
    part.p = std::max(part.p, label);
  }
  if (part.labels.empty()) throw io_error("empty partition file: " + path);
  return part;
}

inline void write_partition_file(const std::string& path, const Partitioning& part) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  for (int label : part.labels) out << label << '\n';
  if (!out) throw io_error("write failed: " + path);
}

/// Canonical config token: four 0/1 characters in the order
/// center_x, center_y, scale_x, scale_y (e.g. "1010").
inline std::string config_to_string(const PreprocessConfig& cfg) {
  std::string s(4, '0');
  if (cfg.center_x) s[0] = '1';
  if (cfg.center_y) s[1] = '1';
  if (cfg.scale_x) s[2] = '1';
  if (cfg.scale_y) s[3] = '1';
  return s;
}

/// Accepts the canonical 4-bit token or the shorthands none, center, scale,
/// center+scale (shorthands apply to both X and Y).
inline PreprocessConfig parse_config(const std::string& s) {
  PreprocessConfig cfg;
  if (s == "none") return cfg;
  if (s == "center") {
    cfg.center_x = cfg.center_y = true;
    return cfg;
  }
  if (s == "scale") {
    cfg.scale_x = cfg.scale_y = true;
    return cfg;
  }
  if (s == "center+scale" || s == "center_scale") {
    cfg.center_x = cfg.center_y = cfg.scale_x = cfg.scale_y = true;
    return cfg;
  }
  if (s.size() == 4 && s.find_first_not_of("01") == std::string::npos) {
    cfg.center_x = s[0] == '1';
    cfg.center_y = s[1] == '1';
    cfg.scale_x = s[2] == '1';
    cfg.scale_y = s[3] == '1';
    return cfg;
  }
  throw io_error("unknown preprocessing config '" + s + "'");
}

}  // namespace cvgram
