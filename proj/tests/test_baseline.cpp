#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cvgram/baseline.hpp"
#include "cvgram/random.hpp"

using namespace cvgram;

namespace {

DatasetPair micro_case() {
  Matrix x(3, 1), y(3, 1);
  x << 1, 3, 5;
  y << 2, 4, 6;
  return DatasetPair(x, y);
}

const Partitioning micro_part{{1, 1, 2}, 2};

}  // namespace

TEST_CASE("baseline micro-case, fold 2 trains on rows {1,2}") {
  const auto data = micro_case();

  SECTION("no preprocessing") {
    const auto results = baseline_fold_products(data, micro_part, {});
    REQUIRE(results.size() == 2);
    CHECK(results[1].fold_id == 2);
    CHECK(results[1].xtx_t(0, 0) == Catch::Approx(10.0).margin(1e-12));
    CHECK(results[1].xty_t(0, 0) == Catch::Approx(14.0).margin(1e-12));
  }
  SECTION("center both") {
    PreprocessConfig cfg;
    cfg.center_x = cfg.center_y = true;
    const auto results = baseline_fold_products(data, micro_part, cfg);
    CHECK(results[1].xtx_t(0, 0) == Catch::Approx(2.0).margin(1e-12));
    CHECK(results[1].xty_t(0, 0) == Catch::Approx(2.0).margin(1e-12));
  }
  SECTION("center and scale both") {
    // The full partitioning is not scalable (fold 1 trains on one row), so
    // the scaled values are checked through the single-fold entry point.
    PreprocessConfig cfg;
    cfg.center_x = cfg.center_y = cfg.scale_x = cfg.scale_y = true;
    CHECK_THROWS_AS(baseline_fold_products(data, micro_part, cfg),
                    scalability_error);
    const auto r = baseline_single_fold(data, {2}, cfg, 2);
    CHECK(r.xtx_t(0, 0) == Catch::Approx(1.0).margin(1e-12));
    CHECK(r.xty_t(0, 0) == Catch::Approx(1.0).margin(1e-12));
    CHECK(r.stats.std_x_t(0) == Catch::Approx(std::sqrt(2.0)).margin(1e-15));
    CHECK(r.stats.std_y_t(0) == Catch::Approx(std::sqrt(2.0)).margin(1e-15));
  }
}

TEST_CASE("zero-variance training column gets std 1") {
  Matrix x(4, 1), y(4, 1);
  x << 4, 9, 4, 4;
  y << 1, 2, 3, 4;
  const DatasetPair data(x, y);
  PreprocessConfig cfg;
  cfg.center_x = cfg.scale_x = true;
  // Fold 1 trains on rows {3, 4} -> constant column.
  const auto results = baseline_fold_products(data, {{1, 1, 2, 2}, 2}, cfg);
  CHECK(results[0].stats.std_x_t(0) == 1.0);
  CHECK(results[0].xtx_t(0, 0) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("raw fold products add back to the dataset product") {
  std::mt19937_64 rng(3);
  const auto data = random_dataset(35, 4, 2, rng);
  const auto part = random_partitioning(35, 6, rng);
  const Matrix xtx = data.x().transpose() * data.x();

  const auto results = baseline_fold_products(data, part, {});
  const auto idx = build_validation_partitions(part);
  for (size_t f = 0; f < results.size(); ++f) {
    const Matrix xv = gather_rows(data.x(), idx.sets[f]);
    const Matrix sum = results[f].xtx_t + xv.transpose() * xv;
    CHECK(max_rel_diff(sum, xtx) <= 1e-10);
  }
}

TEST_CASE("fold xtx is symmetric for every config") {
  std::mt19937_64 rng(4);
  const auto data = random_dataset(25, 5, 2, rng);
  const auto part = random_partitioning(25, 4, rng);
  for (int bits = 0; bits < 16; ++bits) {
    PreprocessConfig cfg{(bits & 8) != 0, (bits & 4) != 0, (bits & 2) != 0,
                         (bits & 1) != 0};
    for (const auto& r : baseline_fold_products(data, part, cfg))
      CHECK((r.xtx_t - r.xtx_t.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("centering either side gives the same xty") {
  std::mt19937_64 rng(5);
  const auto data = random_dataset(40, 3, 2, rng);
  const auto part = random_partitioning(40, 5, rng);
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy) {
      PreprocessConfig cx{true, false, sx != 0, sy != 0};
      PreprocessConfig cy{false, true, sx != 0, sy != 0};
      PreprocessConfig cboth{true, true, sx != 0, sy != 0};
      const auto rx = baseline_fold_products(data, part, cx);
      const auto ry = baseline_fold_products(data, part, cy);
      const auto rb = baseline_fold_products(data, part, cboth);
      for (size_t f = 0; f < rx.size(); ++f) {
        CHECK(max_rel_diff(rx[f].xty_t, ry[f].xty_t) <= 1e-12);
        CHECK(max_rel_diff(rx[f].xty_t, rb[f].xty_t) <= 1e-12);
      }
    }
}

TEST_CASE("preprocessed training submatrix has mean 0 and std 1") {
  std::mt19937_64 rng(6);
  const auto data = random_dataset(30, 4, 2, rng);
  const auto part = random_partitioning(30, 3, rng);
  PreprocessConfig cfg{true, true, true, true};
  const auto results = baseline_fold_products(data, part, cfg);
  const auto idx = build_validation_partitions(part);
  for (size_t f = 0; f < results.size(); ++f) {
    const auto t_rows = complement_rows(idx.sets[f], data.n_rows());
    Matrix xt = gather_rows(data.x(), t_rows);
    xt.rowwise() -= results[f].stats.mean_x_t;
    xt.array().rowwise() /= results[f].stats.std_x_t.array();
    const Vector col_mean = xt.colwise().mean();
    CHECK(col_mean.cwiseAbs().maxCoeff() <= 1e-12);
    const auto nt = static_cast<double>(xt.rows());
    for (Index j = 0; j < xt.cols(); ++j) {
      const double var = (xt.col(j).array() - col_mean(j)).square().sum() / (nt - 1.0);
      CHECK(std::sqrt(var) == Catch::Approx(1.0).margin(1e-10));
    }
  }
}

TEST_CASE("scaling on a non-scalable partitioning is rejected") {
  const DatasetPair data(Matrix::Ones(2, 1) * 2.0, Matrix::Ones(2, 1));
  PreprocessConfig cfg;
  cfg.scale_x = true;
  CHECK_THROWS_AS(baseline_fold_products(data, {{1, 2}, 2}, cfg), scalability_error);
  CHECK_NOTHROW(baseline_fold_products(data, {{1, 2}, 2}, {}));
}

TEST_CASE("invalid partitioning is rejected") {
  const auto data = micro_case();
  CHECK_THROWS_AS(baseline_fold_products(data, {{1, 1, 3}, 3}, {}), partition_error);
  CHECK_THROWS_AS(baseline_fold_products(data, {{1, 2}, 2}, {}), dimension_error);
}
