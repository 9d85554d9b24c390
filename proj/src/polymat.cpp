#include "bdcluster/polymat.hpp"

#include <bit>
#include <map>
#include <sstream>

namespace bdc {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Poly& PolyMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw IndexOutOfRange("matrix index out of range");
  return cells_[static_cast<std::size_t>(r) * cols_ + c];
}

const Poly& PolyMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw IndexOutOfRange("matrix index out of range");
  return cells_[static_cast<std::size_t>(r) * cols_ + c];
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) m.at(r, c) = at(rows[r], cols[c]);
  }
  return m;
}

PolyMatrix PolyMatrix::without(int row, int col) const {
  std::vector<int> rs, cs;
  for (int r = 0; r < rows_; ++r) {
    if (r != row) rs.push_back(r);
  }
  for (int c = 0; c < cols_; ++c) {
    if (c != col) cs.push_back(c);
  }
  return submatrix(rs, cs);
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << '[';
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c);
    os << "]\n";
  }
  return os.str();
}

PolyMatrix symbolic_block(Symbol s, int row_first, int row_last, int col_first, int col_last) {
  PolyMatrix m(row_last - row_first + 1, col_last - col_first + 1);
  for (int r = row_first; r <= row_last; ++r) {
    for (int c = col_first; c <= col_last; ++c) m.at(r - row_first, c - col_first) = Poly::var({s, r, c});
  }
  return m;
}

PolyMatrix symbolic_matrix(int n, Symbol s) { return symbolic_block(s, 1, n, 1, n); }

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return Poly(1);
  if (n > 24) throw std::invalid_argument("matrix too large for subset expansion");
  // level[S] = det of the first |S| rows restricted to the column set S.
  std::map<std::uint32_t, Poly> level{{0u, Poly(1)}};
  for (int r = 0; r < n; ++r) {
    std::map<std::uint32_t, Poly> next;
    for (const auto& [set, minor] : level) {
      for (int c = 0; c < n; ++c) {
        if (set & (1u << c)) continue;
        const Poly& a = m.at(r, c);
        if (a.is_zero()) continue;
        int idx = std::popcount(set & ((1u << c) - 1));
        Poly term = minor * a;
        if ((r + idx) % 2) term = -term;
        next[set | (1u << c)] += term;
      }
    }
    level.clear();
    for (auto& [set, p] : next) {
      if (!p.is_zero()) level.emplace(set, std::move(p));
    }
    if (level.empty()) return Poly();
  }
  return level.begin()->second;
}

MinorRect minor_rect(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw IndexOutOfRange("minor label outside [1,n]");
  if (j > i) return {i, n - j + i, j, n};
  return {i, n, j, n - i + j};
}

PolyMatrix build_M(int n, int i, int j, Symbol s) {
  MinorRect r = minor_rect(n, i, j);
  return symbolic_block(s, r.row_first, r.row_last, r.col_first, r.col_last);
}

Poly minor_det(const MinorRect& rect, Symbol s) {
  return determinant(symbolic_block(s, rect.row_first, rect.row_last, rect.col_first, rect.col_last));
}

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("replacement index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
}

}  // namespace

Poly col_replace(const Poly& f, int n, int i, int j, Symbol s) {
  check_index(n, i);
  check_index(n, j);
  Poly out;
  for (int k = 1; k <= n; ++k) {
    Poly d = partial_derivative(f, {s, k, i});
    if (!d.is_zero()) out += d.mul_monomial(Monomial::of({s, k, j}), 1);
  }
  return out;
}

Poly row_replace(const Poly& f, int n, int i, int j, Symbol s) {
  check_index(n, i);
  check_index(n, j);
  Poly out;
  for (int k = 1; k <= n; ++k) {
    Poly d = partial_derivative(f, {s, i, k});
    if (!d.is_zero()) out += d.mul_monomial(Monomial::of({s, j, k}), 1);
  }
  return out;
}

Poly arrow(int n, const MinorRect& rect, Arrow dir, Symbol s) {
  Poly f = minor_det(rect, s);
  switch (dir) {
    case Arrow::Right: return col_replace(f, n, rect.col_last, rect.col_last + 1, s);
    case Arrow::Left: return col_replace(f, n, rect.col_first, rect.col_first - 1, s);
    case Arrow::Up: return row_replace(f, n, rect.row_first, rect.row_first - 1, s);
    case Arrow::Down: return row_replace(f, n, rect.row_last, rect.row_last + 1, s);
  }
  return f;
}

PolyMatrix glue_columns(const PolyMatrix& top, const PolyMatrix& bottom, int overlap) {
  int cols = top.cols() + bottom.cols() - overlap;
  PolyMatrix m(top.rows() + bottom.rows(), cols);
  for (int r = 0; r < top.rows(); ++r) {
    for (int c = 0; c < top.cols(); ++c) m.at(r, c) = top.at(r, c);
  }
  int shift = top.cols() - overlap;
  for (int r = 0; r < bottom.rows(); ++r) {
    for (int c = 0; c < bottom.cols(); ++c) m.at(top.rows() + r, shift + c) = bottom.at(r, c);
  }
  return m;
}

PolyMatrix glue_rows(const PolyMatrix& left, const PolyMatrix& right, int overlap) {
  return glue_columns(left.transposed(), right.transposed(), overlap).transposed();
}

}  // namespace bdc
