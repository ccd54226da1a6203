#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cvgram/core.hpp"

using namespace cvgram;

TEST_CASE("hadamard_outer_divide worked values") {
  Matrix m(1, 1);
  m << 2.0;
  Vector l(1), r(1);
  l << std::sqrt(2.0);
  r << std::sqrt(2.0);
  CHECK(hadamard_outer_divide(m, l, r)(0, 0) == Catch::Approx(1.0).margin(1e-15));

  Matrix m2(2, 2);
  m2 << 6, 4, 2, 8;
  Vector l2(2), r2(2);
  l2 << 2, 1;
  r2 << 3, 2;
  const Matrix out = hadamard_outer_divide(m2, l2, r2);
  // Per-entry division oracle.
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      CHECK(out(i, j) == m2(i, j) / (l2(i) * r2(j)));
  CHECK(out(0, 0) == 1.0);
  CHECK(out(0, 1) == 1.0);
  CHECK(out(1, 0) == Catch::Approx(2.0 / 3.0));
  CHECK(out(1, 1) == 4.0);
}

TEST_CASE("hadamard_outer_divide with all-ones divisors is the identity") {
  std::mt19937_64 rng(1);
  Matrix m(5, 3);
  for (Index i = 0; i < m.size(); ++i) m.data()[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const Matrix out = hadamard_outer_divide(m, Vector::Ones(5), Vector::Ones(3));
  CHECK(out == m);  // exact
}

TEST_CASE("hadamard_outer_divide inverts under multiplication") {
  std::mt19937_64 rng(2);
  auto u = [&] { return 0.25 + static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(4, 6);
    Vector l(4), r(6);
    for (Index i = 0; i < m.size(); ++i) m.data()[i] = u();
    for (Index i = 0; i < 4; ++i) l(i) = u();
    for (Index j = 0; j < 6; ++j) r(j) = u();
    const Matrix out = hadamard_outer_divide(m, l, r);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 6; ++j) {
        const double back = out(i, j) * (l(i) * r(j));
        CHECK(back == Catch::Approx(m(i, j)).epsilon(1e-15));
      }
  }
}

TEST_CASE("hadamard_outer_divide rejects non-positive divisors") {
  Matrix m = Matrix::Ones(2, 2);
  Vector ok = Vector::Ones(2);
  Vector bad(2);
  bad << 1.0, 0.0;
  CHECK_THROWS_AS(hadamard_outer_divide(m, bad, ok), std::invalid_argument);
  bad << 1.0, -2.0;
  CHECK_THROWS_AS(hadamard_outer_divide(m, ok, bad), std::invalid_argument);
}

TEST_CASE("DatasetPair enforces its invariants") {
  CHECK_THROWS_AS(DatasetPair(Matrix::Ones(3, 2), Matrix::Ones(4, 1)), dimension_error);
  CHECK_THROWS_AS(DatasetPair(Matrix::Ones(1, 2), Matrix::Ones(1, 1)), dimension_error);
  Matrix bad = Matrix::Ones(3, 2);
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(DatasetPair(bad, Matrix::Ones(3, 1)), dimension_error);

  const DatasetPair data(Matrix::Ones(3, 2), Matrix::Ones(3, 1));
  CHECK(data.n_rows() == 3);
  CHECK(data.n_features() == 2);
  CHECK(data.n_responses() == 1);
}
