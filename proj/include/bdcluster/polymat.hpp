#pragma once

#include <vector>

#include "bdcluster/polyring.hpp"

namespace bdc {

struct NotSquare : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // Zero-based access.
  Poly& at(int r, int c);
  const Poly& at(int r, int c) const;

  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix without(int row, int col) const;
  PolyMatrix transposed() const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> cells_;
};

// Generic symbolic matrix of variables with 1-based index ranges.
PolyMatrix symbolic_block(Symbol s, int row_first, int row_last, int col_first, int col_last);
PolyMatrix symbolic_matrix(int n, Symbol s = Symbol::X);

// Cofactor expansion memoized over column subsets.
Poly determinant(const PolyMatrix& m);

// Inclusive 1-based rectangle of rows and columns.
struct MinorRect {
  int row_first = 1;
  int row_last = 1;
  int col_first = 1;
  int col_last = 1;

  int size() const { return row_last - row_first + 1; }
  friend bool operator==(const MinorRect&, const MinorRect&) = default;
};

// Rectangle of the standard minor with upper-left corner (i, j).
MinorRect minor_rect(int n, int i, int j);
PolyMatrix build_M(int n, int i, int j, Symbol s = Symbol::X);
Poly minor_det(const MinorRect& rect, Symbol s = Symbol::X);

// f^{i<-j}: column i of the argument replaced by column j.
Poly col_replace(const Poly& f, int n, int i, int j, Symbol s = Symbol::X);
// f_{i<-j}: row i of the argument replaced by row j.
Poly row_replace(const Poly& f, int n, int i, int j, Symbol s = Symbol::X);

enum class Arrow { Right, Left, Up, Down };

// Arrow shorthands for f = det X_rect:
// Right replaces the last column by the next one, Left the first column by
// the previous one, Up the first row by the previous one, Down the last row
// by the next one.
Poly arrow(int n, const MinorRect& rect, Arrow dir, Symbol s = Symbol::X);

// Places `top` above `bottom` so that the last two columns of `top` share
// columns with the first two columns of `bottom`.
PolyMatrix glue_columns(const PolyMatrix& top, const PolyMatrix& bottom, int overlap = 2);
// Places `left` beside `right` so that the last two rows of `left` share rows
// with the first two rows of `right`.
PolyMatrix glue_rows(const PolyMatrix& left, const PolyMatrix& right, int overlap = 2);

}  // namespace bdc
