#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "syz/error.hpp"
#include "syz/rational.hpp"
#include "syz/rational_matrix.hpp"

namespace {

using syz::Rational;
using syz::RationalMatrix;

RationalMatrix dense(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> d;
  for (const auto& r : rows) {
    d.emplace_back();
    for (long v : r) d.back().emplace_back(v);
  }
  return RationalMatrix::from_dense(d);
}

void expect_in_kernel(const RationalMatrix& m, const std::vector<Rational>& v) {
  for (const auto& x : syz::apply(m, v)) EXPECT_EQ(x, 0);
}

TEST(Rank, Identity) { EXPECT_EQ(syz::rank(RationalMatrix::identity(3)), 3u); }

TEST(Rank, ZeroMatrix) { EXPECT_EQ(syz::rank(RationalMatrix(2, 2)), 0u); }

TEST(Rank, ProportionalRows) { EXPECT_EQ(syz::rank(dense({{1, 2}, {2, 4}})), 1u); }

TEST(KernelDim, Examples) {
  EXPECT_EQ(syz::kernel_dim(RationalMatrix::identity(3)), 0u);
  EXPECT_EQ(syz::kernel_dim(RationalMatrix(2, 2)), 2u);
  EXPECT_EQ(syz::kernel_dim(dense({{1, 2}, {2, 4}})), 1u);
}

TEST(KernelBasis, IdentityHasNone) {
  EXPECT_TRUE(syz::kernel_basis(RationalMatrix::identity(4)).empty());
}

TEST(KernelBasis, SingleRowSpansAntidiagonal) {
  const auto m = dense({{1, 1}});
  const auto basis = syz::kernel_basis(m);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0][0], -basis[0][1]);
  EXPECT_NE(basis[0][0], 0);
  expect_in_kernel(m, basis[0]);
}

TEST(KernelBasis, ZeroMatrixGivesIndependentVectors) {
  const RationalMatrix m(2, 3);
  const auto basis = syz::kernel_basis(m);
  ASSERT_EQ(basis.size(), 3u);
  oracle::DenseMatrix stacked(basis.begin(), basis.end());
  EXPECT_EQ(oracle::dense_rank(stacked), 3u);
}

TEST(RationalMatrix, FromTripletsSumsDuplicatesAndDropsZeros) {
  const auto m = RationalMatrix::from_triplets(
      2, 2, {{0, 0, Rational(1, 2)}, {0, 0, Rational(1, 2)}, {1, 1, 3}, {1, 1, -3}});
  EXPECT_EQ(m.at(0, 0), 1);
  EXPECT_EQ(m.nnz(), 1u);
  EXPECT_TRUE(syz::rank(m) == 1u);
}

TEST(RationalMatrix, FromTripletsRejectsOutOfRange) {
  EXPECT_THROW(RationalMatrix::from_triplets(2, 2, {{2, 0, 1}}), syz::RangeError);
  EXPECT_THROW(RationalMatrix::from_triplets(2, 2, {{0, 5, 1}}), syz::RangeError);
}

TEST(RationalMatrix, EmptyShapes) {
  EXPECT_EQ(syz::rank(RationalMatrix(0, 4)), 0u);
  EXPECT_EQ(syz::kernel_dim(RationalMatrix(0, 4)), 4u);
  EXPECT_EQ(syz::kernel_dim(RationalMatrix(3, 0)), 0u);
}

TEST(RationalMatrix, ProductAndTranspose) {
  const auto a = dense({{1, 2, 0}, {0, 1, -1}});
  const auto b = dense({{1, 0}, {0, 1}, {2, 3}});
  EXPECT_EQ(a * b, dense({{1, 2}, {-2, -2}}));
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(a.transpose().at(2, 1), -1);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(syz::parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(syz::parse_rational("7"), 7);
  EXPECT_EQ(syz::format_rational(Rational(3)), "3/1");
  EXPECT_EQ(syz::format_rational_short(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(syz::format_rational_short(Rational(4)), "4");
  EXPECT_THROW(syz::parse_rational("1/0"), std::exception);
  EXPECT_THROW(syz::parse_rational("x"), std::exception);
}

// Sparse rank and kernel against dense elimination on many small random
// matrices, including rational entries and heavy rank deficiency.
TEST(RankProperty, MatchesDenseOracle) {
  std::mt19937 rng(20241016);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution sparse(0.4);
  for (int trial = 0; trial < 1200; ++trial) {
    const int rows = dim(rng);
    const int cols = dim(rng);
    std::vector<std::vector<Rational>> d(rows, std::vector<Rational>(cols));
    for (auto& r : d)
      for (auto& v : r) v = sparse(rng) ? Rational(0) : Rational(entry(rng), den(rng));
    if (trial % 5 == 0 && rows > 1) d[rows - 1] = d[0];  // force a dependency
    const auto m = RationalMatrix::from_dense(d);
    const std::size_t expected = oracle::dense_rank(d);
    ASSERT_EQ(syz::rank(m), expected) << "trial " << trial;
    ASSERT_EQ(syz::rank(m.transpose()), expected) << "trial " << trial;
    const auto basis = syz::kernel_basis(m);
    ASSERT_EQ(basis.size(), static_cast<std::size_t>(cols) - expected);
    for (const auto& v : basis) expect_in_kernel(m, v);
    if (!basis.empty()) {
      oracle::DenseMatrix stacked(basis.begin(), basis.end());
      ASSERT_EQ(oracle::dense_rank(stacked), basis.size());
    }
  }
}

TEST(RankProperty, DeterministicAcrossCalls) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<std::vector<Rational>> d(5, std::vector<Rational>(7));
  for (auto& r : d)
    for (auto& v : r) v = entry(rng);
  const auto m = RationalMatrix::from_dense(d);
  EXPECT_EQ(syz::kernel_basis(m), syz::kernel_basis(m));
}

}  // namespace
