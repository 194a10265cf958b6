#include <gtest/gtest.h>
#include <omp.h>

#include <random>

#include "mhc/matrix.hpp"

using namespace mhc;

namespace {

ScalarMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned order, double density, std::mt19937_64& rng) {
  ScalarMatrix m(rows, cols, order);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<long> coeff(-2, 2), power(0, static_cast<long>(order) - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) < density) m.at(r, c) = CycloScalar::zeta(order, power(rng)) * CycloScalar::from_int(order, coeff(rng));
  return m;
}

}  // namespace

TEST(Rank, FourierMatrixIsInvertible) {
  for (unsigned n : {2u, 3u, 5u, 6u}) {
    ScalarMatrix m(n, n, n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) m.at(i, j) = CycloScalar::zeta(n, static_cast<long>(i * j));
    EXPECT_EQ(rank(m), n);
    EXPECT_EQ(serial::rank(m), n);
  }
}

TEST(Rank, OuterProductHasRankOne) {
  ScalarMatrix m(4, 5, 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      m.at(i, j) = CycloScalar::zeta(3, static_cast<long>(i)) * CycloScalar::from_int(3, static_cast<long>(j + 1));
  EXPECT_EQ(rank(m), 1u);
}

TEST(Rank, EmptyAndZero) {
  EXPECT_EQ(rank(ScalarMatrix(0, 3, 1)), 0u);
  EXPECT_EQ(rank(ScalarMatrix(3, 3, 4)), 0u);
  EXPECT_EQ(rank(std::vector<SparseRow>{}, 5), 0u);
}

TEST(Rank, SparseAgreesWithDenseReference) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned order = trial % 3 == 0 ? 1 : (trial % 3 == 1 ? 3 : 4);
    const auto m = random_matrix(3 + trial % 7, 2 + (trial * 5) % 9, order, 0.3 + 0.1 * (trial % 5), rng);
    EXPECT_EQ(rank(m), serial::rank(m)) << trial;
    EXPECT_EQ(rank(m.transpose()), rank(m)) << trial;
  }
}

TEST(Rank, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(5);
  const auto m = random_matrix(40, 30, 6, 0.2, rng);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = rank(m);
  omp_set_num_threads(4);
  const auto four = rank(m);
  omp_set_num_threads(saved);
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, serial::rank(m));
}
