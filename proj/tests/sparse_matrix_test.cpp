#include "oracles.hpp"

#include "tork/rational.hpp"
#include "tork/sparse_matrix.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

namespace tork {
namespace {

SparseMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<MatrixEntry> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) entries.push_back({r, c, Rational(rows[r][c])});
  }
  return SparseMatrix(rows.size(), rows.empty() ? 0 : rows[0].size(), std::move(entries));
}

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(parse_rational("3/-6"), Rational(-1, 2));
  EXPECT_TRUE(is_integer(parse_rational("8/4")));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(SparseMatrix, RejectsBadEntries) {
  EXPECT_THROW(SparseMatrix(2, 2, {{2, 0, Rational(1)}}), std::invalid_argument);
  EXPECT_THROW(SparseMatrix(2, 2, {{0, 0, Rational(1)}, {0, 0, Rational(2)}}), std::invalid_argument);
  const SparseMatrix summed = SparseMatrix::accumulate(2, 2, {{0, 0, Rational(1)}, {0, 0, Rational(-1)}});
  EXPECT_TRUE(summed.is_zero());
}

TEST(SparseMatrix, DropsStoredZeros) {
  const SparseMatrix a(2, 3, {{0, 1, Rational(0)}, {1, 2, Rational(5)}});
  EXPECT_EQ(a.nonzeros(), 1u);
  EXPECT_EQ(a.at(1, 2), Rational(5));
  EXPECT_EQ(a.at(0, 1), Rational(0));
}

TEST(SparseMatrix, RankExamples) {
  EXPECT_EQ(rank(SparseMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(SparseMatrix(4, 7)), 0u);
  EXPECT_EQ(rank(from_rows({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(nullity(SparseMatrix::identity(3)), 0u);
  EXPECT_EQ(nullity(SparseMatrix(4, 7)), 7u);
  EXPECT_EQ(nullity(from_rows({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(SparseMatrix(0, 5)), 0u);
  EXPECT_EQ(nullity(SparseMatrix(0, 5)), 5u);
}

TEST(SparseMatrix, ComposeExamples) {
  const SparseMatrix a = from_rows({{1, -2, 3}, {0, 4, 5}});
  EXPECT_EQ(compose(a, SparseMatrix::identity(3)), a);
  EXPECT_TRUE(compose(a, SparseMatrix(3, 4)).is_zero());
  const SparseMatrix n = from_rows({{0, 1}, {0, 0}});
  EXPECT_TRUE(compose(n, n).is_zero());
  EXPECT_THROW(compose(a, a), std::invalid_argument);
}

TEST(SparseMatrix, ComposeMatchesDenseProduct) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 1 + rng() % 6, k = 1 + rng() % 6, c = 1 + rng() % 6;
    const SparseMatrix a = oracle::random_integer_matrix(rng, r, k, 50, 3);
    const SparseMatrix b = oracle::random_integer_matrix(rng, k, c, 50, 3);
    EXPECT_EQ(oracle::to_dense(compose(a, b)),
              oracle::dense_product(oracle::to_dense(a), oracle::to_dense(b), c));
  }
}

TEST(SparseMatrix, RankAgreesWithDenseOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t rows = rng() % 9, cols = rng() % 9;
    const int density = 10 + static_cast<int>(rng() % 80);
    const SparseMatrix a = oracle::random_integer_matrix(rng, rows, cols, density, 4);
    EXPECT_EQ(rank(a), oracle::dense_rank(oracle::to_dense(a))) << "trial " << trial;
  }
}

TEST(SparseMatrix, RankAgreesOnLowRankProducts) {
  // Products of thin factors force many cancellations during elimination.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t inner = 1 + rng() % 3;
    const SparseMatrix a = oracle::random_integer_matrix(rng, 7, inner, 70, 5);
    const SparseMatrix b = oracle::random_integer_matrix(rng, inner, 8, 70, 5);
    const SparseMatrix p = compose(a, b);
    EXPECT_EQ(rank(p), oracle::dense_rank(oracle::to_dense(p)));
    EXPECT_LE(rank(p), std::min(rank(a), rank(b)));
  }
}

TEST(SparseMatrix, RankHandlesFractions) {
  const SparseMatrix a(2, 2, {{0, 0, Rational(1, 3)}, {0, 1, Rational(1, 2)},
                              {1, 0, Rational(2, 9)}, {1, 1, Rational(1, 3)}});
  EXPECT_EQ(rank(a), 1u);
}

TEST(SparseMatrix, TransposeProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const SparseMatrix a = oracle::random_integer_matrix(rng, rng() % 7, rng() % 7, 40, 3);
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ(rank(a), rank(a.transpose()));
    EXPECT_EQ(rank(a) + nullity(a), a.cols());
  }
}

TEST(SparseMatrix, BlockDiagonalRankIsSumOfBlocks) {
  // Two disjoint blocks and an isolated zero column.
  const SparseMatrix a(4, 5, {{0, 0, Rational(1)}, {0, 1, Rational(1)}, {1, 0, Rational(2)},
                              {1, 1, Rational(2)}, {2, 3, Rational(1)}, {3, 4, Rational(-1)},
                              {2, 4, Rational(3)}});
  EXPECT_EQ(rank(a), 3u);
}

}  // namespace
}  // namespace tork
