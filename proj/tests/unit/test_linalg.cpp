#include <gtest/gtest.h>

#include <random>

#include "preproj/linalg.hpp"

using namespace preproj;

namespace {

QMatrix random_matrix(std::mt19937& rng, int r, int c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> dist(lo, hi);
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST(Linalg, RrefAndRank) {
  auto m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2);
  auto r = m;
  auto piv = rref_in_place(r);
  EXPECT_EQ(piv, (std::vector<int>{0, 1}));
  EXPECT_EQ(r, QMatrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  EXPECT_EQ(rank(QMatrix(0, 3)), 0);
}

TEST(Linalg, NullspaceAndSolve) {
  auto m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  auto K = nullspace(m);
  EXPECT_EQ(K.cols(), 2);
  EXPECT_TRUE((m * K).is_zero());
  auto B = QMatrix::from_rows({{1, 0}, {1, 1}, {0, 1}});
  auto C = QMatrix::from_rows({{2}, {5}, {3}});
  EXPECT_EQ(solve_left(B, C), QMatrix::from_rows({{2}, {3}}));
  EXPECT_THROW(solve_left(B, QMatrix::from_rows({{1}, {0}, {1}})), ConsistencyError);
}

TEST(Linalg, RationalStrings) {
  Rational q(-3, 6);
  q.canonicalize();
  EXPECT_EQ(rational_to_string(q), "-1/2");
  EXPECT_EQ(rational_to_string(Rational(4)), "4");
  EXPECT_EQ(rational_from_string("-1/2"), q);
  EXPECT_EQ(rational_from_string("2/4"), Rational(1, 2));
  EXPECT_THROW(rational_from_string("1/0"), InputError);
  EXPECT_THROW(rational_from_string("x"), InputError);
}

// Property: rank-nullity, and kernel vectors are annihilated, on random input.
TEST(LinalgProperty, RankNullity) {
  std::mt19937 rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + trial % 6, c = 1 + (trial / 6) % 7;
    auto m = random_matrix(rng, r, c, -1, 1);
    auto K = nullspace(m);
    EXPECT_EQ(rank(m) + K.cols(), c);
    EXPECT_TRUE((m * K).is_zero());
    EXPECT_EQ(rank(K), K.cols());
    auto E = column_echelon_basis(m);
    EXPECT_EQ(E.cols(), rank(m));
    EXPECT_EQ(column_echelon_basis(E), E);
    // same column space: every column of m is a combination of E
    if (E.cols() > 0) {
      EXPECT_NO_THROW(solve_left(E, m));
    }
  }
}
