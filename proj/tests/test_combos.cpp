#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cvgram/combos.hpp"
#include "cvgram/random.hpp"

using namespace cvgram;

TEST_CASE("enumerate_configs yields all 16 in counter order") {
  const auto configs = enumerate_configs();
  REQUIRE(configs.size() == 16);
  CHECK(configs.front() == PreprocessConfig{});
  const PreprocessConfig all{true, true, true, true};
  CHECK(configs.back() == all);
  std::set<std::string> seen;
  for (const auto& cfg : configs) {
    std::string key;
    key += cfg.center_x ? '1' : '0';
    key += cfg.center_y ? '1' : '0';
    key += cfg.scale_x ? '1' : '0';
    key += cfg.scale_y ? '1' : '0';
    seen.insert(key);
  }
  CHECK(seen.size() == 16);
}

TEST_CASE("generic data splits into 8 xty and 12 pair classes") {
  std::mt19937_64 rng(20);
  const auto data = random_dataset(30, 4, 3, rng);
  const auto part = random_partitioning(30, 5, rng);
  const auto report = classify_combos(data, part);

  CHECK(report.n_xty_classes == 8);
  CHECK(report.n_pair_classes == 12);
  CHECK_FALSE(report.degenerate);
  CHECK(report.min_xty_separation > report.tol);
  CHECK(report.min_pair_separation > report.tol);

  const auto cfg_index = [](bool cx, bool cy, bool sx, bool sy) {
    return (cx ? 8 : 0) + (cy ? 4 : 0) + (sx ? 2 : 0) + (sy ? 1 : 0);
  };
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy) {
      // Any centering flag collapses to the same XtY class.
      const int both = report.xty_class[static_cast<size_t>(
          cfg_index(true, true, sx != 0, sy != 0))];
      CHECK(report.xty_class[static_cast<size_t>(
                cfg_index(true, false, sx != 0, sy != 0))] == both);
      CHECK(report.xty_class[static_cast<size_t>(
                cfg_index(false, true, sx != 0, sy != 0))] == both);
      // Pair classes additionally distinguish center X from center Y.
      CHECK(report.pair_class[static_cast<size_t>(
                cfg_index(true, false, sx != 0, sy != 0))] !=
            report.pair_class[static_cast<size_t>(
                cfg_index(false, true, sx != 0, sy != 0))]);
    }
}

TEST_CASE("xtx is exactly equal across configs that differ only in Y flags") {
  std::mt19937_64 rng(21);
  const auto data = random_dataset(20, 3, 2, rng);
  const auto part = random_partitioning(20, 4, rng);
  for (int cx = 0; cx < 2; ++cx)
    for (int sx = 0; sx < 2; ++sx) {
      PreprocessConfig a{cx != 0, false, sx != 0, false};
      PreprocessConfig b{cx != 0, true, sx != 0, true};
      const auto ra = run_all_folds(data, part, a);
      const auto rb = run_all_folds(data, part, b);
      for (size_t f = 0; f < ra.size(); ++f)
        CHECK(ra[f].xtx_t == rb[f].xtx_t);  // bitwise
    }
}

TEST_CASE("antisymmetric paired data is reported as degenerate") {
  // Rows come in (r, -r) pairs kept in the same fold, so every training mean
  // is zero and centered classes merge with uncentered ones.
  std::mt19937_64 rng(22);
  const Index n = 12;
  Matrix x(n, 2), y(n, 2);
  for (Index i = 0; i < n; i += 2) {
    for (Index j = 0; j < 2; ++j) {
      x(i, j) = uniform01(rng) + 0.5;
      x(i + 1, j) = -x(i, j);
      y(i, j) = uniform01(rng) + 0.5;
      y(i + 1, j) = -y(i, j);
    }
  }
  std::vector<int> labels(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) labels[static_cast<size_t>(i)] = 1 + static_cast<int>(i / 4);
  const auto report = classify_combos(DatasetPair(x, y), {labels, 3});
  CHECK(report.degenerate);
  CHECK(report.n_xty_classes < 8);
  // Centering is a no-op here, so 0000 and 1100 land in the same class.
  CHECK(report.xty_class[0] == report.xty_class[12]);
}

TEST_CASE("classify_combos requires a scalable partitioning") {
  const DatasetPair data(Matrix::Ones(2, 1) * 2.0, Matrix::Ones(2, 1));
  CHECK_THROWS_AS(classify_combos(data, {{1, 2}, 2}), scalability_error);
}

TEST_CASE("combo table prints the class counts") {
  std::mt19937_64 rng(23);
  const auto data = random_dataset(24, 3, 2, rng);
  const auto part = random_partitioning(24, 4, rng);
  const auto text = format_combo_table(classify_combos(data, part));
  CHECK(text.find("distinct XtY classes: 8") != std::string::npos);
  CHECK(text.find("distinct pair classes: 12") != std::string::npos);
  CHECK(text.find("center both") != std::string::npos);
  CHECK(text.find("warning") == std::string::npos);
}
