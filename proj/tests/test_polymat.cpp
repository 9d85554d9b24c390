#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace bdc;
using namespace bdc::testing;

namespace {

Poly x(int i, int j) { return Poly::var(xvar(i, j)); }

Rational det_value(const QGrid& g) { return *constant_value(determinant(to_poly_matrix(g))); }

void expect_block(const PolyMatrix& m, int r1, int r2, int c1, int c2) {
  ASSERT_EQ(m.rows(), r2 - r1 + 1);
  ASSERT_EQ(m.cols(), c2 - c1 + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) EXPECT_EQ(m.at(r, c), x(r1 + r, c1 + c));
  }
}

}  // namespace

TEST(Determinant, TwoByTwo) {
  PolyMatrix m = symbolic_matrix(2);
  EXPECT_EQ(determinant(m), x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1));
}

TEST(Determinant, Identity) {
  PolyMatrix m(5, 5);
  for (int i = 0; i < 5; ++i) m.at(i, i) = Poly(1);
  EXPECT_EQ(determinant(m), Poly(1));
}

TEST(Determinant, NotSquare) { EXPECT_THROW(determinant(PolyMatrix(2, 3)), NotSquare); }

TEST(Determinant, MatchesCofactorOracle) {
  for (int trial = 0; trial < 60; ++trial) {
    int n = uniform(1, 5);
    QGrid g = random_grid(n, n);
    EXPECT_EQ(det_value(g), cofactor_det(g));
  }
}

TEST(Determinant, SymbolicMatchesEvaluation) {
  Poly d = determinant(symbolic_matrix(4));
  EXPECT_EQ(d.size(), 24u);
  for (int trial = 0; trial < 20; ++trial) {
    Assignment a = random_point(4);
    QGrid g(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) g[i][j] = a[xvar(i + 1, j + 1)];
    }
    EXPECT_EQ(evaluate(d, a), cofactor_det(g));
  }
}

TEST(Determinant, AlternatingAndMultilinear) {
  for (int trial = 0; trial < 30; ++trial) {
    int n = uniform(2, 5);
    QGrid g = random_grid(n, n);
    QGrid swapped = g;
    std::swap(swapped[0], swapped[n - 1]);
    EXPECT_EQ(det_value(swapped), -det_value(g));
    QGrid scaled = g;
    Rational s = random_rational();
    for (auto& v : scaled[1]) v *= s;
    EXPECT_EQ(det_value(scaled), s * det_value(g));
  }
}

TEST(DesnanotJacobi, RandomSquareMatrices) {
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = uniform(3, 6);
    QGrid a = random_grid(n, n);
    int r1 = uniform(0, n - 2), r2 = uniform(r1 + 1, n - 1);
    int c1 = uniform(0, n - 2), c2 = uniform(c1 + 1, n - 1);
    Rational lhs = det_value(a) * det_value(drop(a, {r1, r2}, {c1, c2}));
    Rational rhs = det_value(drop(a, {r1}, {c1})) * det_value(drop(a, {r2}, {c2})) -
                   det_value(drop(a, {r2}, {c1})) * det_value(drop(a, {r1}, {c2}));
    EXPECT_EQ(lhs, rhs) << "n=" << n;
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(DesnanotJacobi, ModifiedForTallMatrices) {
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int k = uniform(2, 5);
    QGrid b = random_grid(k + 1, k);
    int r1 = uniform(0, k - 2), r2 = uniform(r1 + 1, k - 1), r3 = uniform(r2 + 1, k);
    int c1 = uniform(0, k - 1);
    Rational lhs = det_value(drop(b, {r1}, {})) * det_value(drop(b, {r2, r3}, {c1}));
    Rational rhs = det_value(drop(b, {r2}, {})) * det_value(drop(b, {r1, r3}, {c1})) -
                   det_value(drop(b, {r3}, {})) * det_value(drop(b, {r1, r2}, {c1}));
    EXPECT_EQ(lhs, rhs) << "k=" << k;
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(BuildM, FullMatrixAtOrigin) { expect_block(build_M(3, 1, 1), 1, 3, 1, 3); }

TEST(BuildM, LowerBranch) { expect_block(build_M(3, 2, 1), 2, 3, 1, 2); }

TEST(BuildM, UpperBranch) { expect_block(build_M(3, 1, 2), 1, 2, 2, 3); }

TEST(BuildM, SquareAndTouchingBorder) {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        MinorRect r = minor_rect(n, i, j);
        EXPECT_EQ(r.row_last - r.row_first, r.col_last - r.col_first);
        EXPECT_TRUE(r.row_last == n || r.col_last == n);
        EXPECT_EQ(r.row_first, i);
        EXPECT_EQ(r.col_first, j);
      }
    }
  }
}

TEST(BuildM, OutOfRange) {
  EXPECT_THROW(build_M(3, 0, 1), IndexOutOfRange);
  EXPECT_THROW(build_M(3, 1, 4), IndexOutOfRange);
}

TEST(BuildM, YSymbol) {
  PolyMatrix m = build_M(3, 2, 2, Symbol::Y);
  EXPECT_EQ(m.at(0, 0), Poly::var(yvar(2, 2)));
}

TEST(Replace, ColumnOfSingleEntry) { EXPECT_EQ(col_replace(x(3, 1), 3, 1, 2), x(3, 2)); }

TEST(Replace, MissingColumnGivesZero) {
  Poly f = minor_det({1, 2, 2, 3});
  EXPECT_TRUE(col_replace(f, 5, 1, 5).is_zero());
}

TEST(Replace, RepeatedColumnGivesZero) {
  Poly f = minor_det({1, 2, 2, 3});
  EXPECT_TRUE(col_replace(f, 3, 2, 3).is_zero());
}

TEST(Replace, MatchesSubstitutedMinor) {
  // Column 2 of X_{[1,3]}^{[1,3]} replaced by column 4, n = 4.
  Poly f = minor_det({1, 3, 1, 3});
  PolyMatrix m = symbolic_block(Symbol::X, 1, 3, 1, 3);
  for (int r = 0; r < 3; ++r) m.at(r, 1) = x(r + 1, 4);
  EXPECT_EQ(col_replace(f, 4, 2, 4), determinant(m));
  PolyMatrix rows = symbolic_block(Symbol::X, 1, 3, 1, 3);
  for (int c = 0; c < 3; ++c) rows.at(2, c) = x(4, c + 1);
  EXPECT_EQ(row_replace(f, 4, 3, 4), determinant(rows));
}

TEST(Replace, IndexOutOfRange) { EXPECT_THROW(col_replace(x(1, 1), 3, 4, 1), IndexOutOfRange); }

TEST(Arrow, RightOfSingleEntry) { EXPECT_EQ(arrow(3, minor_rect(3, 3, 1), Arrow::Right), x(3, 2)); }

TEST(Arrow, LeftOfSingleEntry) { EXPECT_EQ(arrow(3, minor_rect(3, 1, 3), Arrow::Left), x(1, 2)); }

TEST(Arrow, UpOfTwoByTwo) {
  EXPECT_EQ(arrow(3, minor_rect(3, 2, 1), Arrow::Up), x(1, 1) * x(3, 2) - x(1, 2) * x(3, 1));
}

TEST(Arrow, DownOfTwoByTwo) {
  EXPECT_EQ(arrow(3, {1, 2, 2, 3}, Arrow::Down), x(1, 2) * x(3, 3) - x(1, 3) * x(3, 2));
}

TEST(Arrow, LeavingTheGrid) {
  EXPECT_THROW(arrow(3, minor_rect(3, 1, 1), Arrow::Up), IndexOutOfRange);
  EXPECT_THROW(arrow(3, minor_rect(3, 1, 1), Arrow::Right), IndexOutOfRange);
}

TEST(Glue, ColumnsShareTwoColumns) {
  PolyMatrix top = symbolic_block(Symbol::X, 3, 3, 1, 2);
  PolyMatrix bottom = symbolic_block(Symbol::Y, 1, 1, 2, 3);
  PolyMatrix m = glue_columns(top, bottom);
  ASSERT_EQ(m.rows(), 2);
  ASSERT_EQ(m.cols(), 2);
  EXPECT_EQ(m.at(1, 0), Poly::var(yvar(1, 2)));
}

TEST(Glue, RowsShareTwoRows) {
  PolyMatrix left = symbolic_block(Symbol::X, 1, 3, 2, 3);
  PolyMatrix right = symbolic_block(Symbol::X, 1, 3, 1, 2);
  PolyMatrix m = glue_rows(left, right);
  ASSERT_EQ(m.rows(), 4);
  ASSERT_EQ(m.cols(), 4);
  EXPECT_TRUE(m.at(3, 0).is_zero());
  EXPECT_TRUE(m.at(0, 3).is_zero());
  EXPECT_EQ(m.at(1, 2), x(1, 1));
  EXPECT_EQ(m.at(2, 1), x(3, 3));
}
