#include "bdcluster/bdseed.hpp"

#include <algorithm>

namespace bdc {

BDTriple make_triple(int n, int alpha, int beta, GroupMode mode) {
  if (n < 3 || n > kMaxN) {
    throw InvalidTriple("n must be in [3," + std::to_string(kMaxN) + "], got " + std::to_string(n));
  }
  BDTriple t{n, alpha, beta, mode, false};
  if (alpha == beta) throw InvalidTriple("alpha and beta must differ");
  if (alpha > beta) {
    std::swap(t.alpha, t.beta);
    t.transposed = true;
  }
  if (t.alpha < 1 || t.beta > n - 1) {
    throw InvalidTriple("roots must lie in [1," + std::to_string(n - 1) + "]");
  }
  return t;
}

std::string Label::to_string() const { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }

std::string to_string(FunctionKind k) {
  switch (k) {
    case FunctionKind::Standard: return "standard";
    case FunctionKind::Theta: return "theta";
    case FunctionKind::Psi: return "psi";
    case FunctionKind::Mutated: return "mutated";
  }
  return "standard";
}

bool is_first_family(const BDTriple& t, Label l) {
  return l.col >= 1 && l.col <= t.alpha && l.row == t.n + l.col - t.alpha;
}

bool is_second_family(const BDTriple& t, Label l) {
  return l.row >= 1 && l.row <= t.beta && l.col == t.n + l.row - t.beta;
}

bool is_frozen(const BDTriple& t, Label l) {
  if (l.row == 1 && l.col == 1) return t.mode == GroupMode::GL;
  if (l.row != 1 && l.col != 1) return false;
  if (l == Label{t.alpha + 1, 1} || l == Label{1, t.beta + 1}) return false;
  return true;
}

std::vector<Label> cluster_labels(int n, GroupMode mode) {
  std::vector<Label> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == 1 && j == 1 && mode == GroupMode::SL) continue;
      out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Label> frozen_labels(const BDTriple& t) {
  std::vector<Label> out;
  for (Label l : cluster_labels(t.n, t.mode)) {
    if (is_frozen(t, l)) out.push_back(l);
  }
  return out;
}

namespace {

Symbol other(Symbol s) { return s == Symbol::X ? Symbol::Y : Symbol::X; }

bool theta_nests(const BDTriple& t) { return 2 * t.beta == t.n; }
bool psi_nests(const BDTriple& t) { return 2 * t.alpha == t.n; }

PolyMatrix theta_matrix(const BDTriple& t, int k, Symbol xs);
PolyMatrix psi_matrix(const BDTriple& t, int m, Symbol ys);

// phi_{1,beta+1} with the column beta prepended.
PolyMatrix theta_lower(const BDTriple& t, Symbol ys) {
  if (!theta_nests(t)) return symbolic_block(ys, 1, t.n - t.beta, t.beta, t.n);
  PolyMatrix inner = psi_matrix(t, 1, ys);
  PolyMatrix m(inner.rows(), inner.cols() + 1);
  for (int r = 0; r < inner.rows(); ++r) {
    if (r <= t.beta) m.at(r, 0) = Poly::var({ys, r + 1, t.beta});
    for (int c = 0; c < inner.cols(); ++c) m.at(r, c + 1) = inner.at(r, c);
  }
  return m;
}

// phi_{alpha+1,1} with the row alpha prepended.
PolyMatrix psi_right(const BDTriple& t, Symbol xs) {
  if (!psi_nests(t)) return symbolic_block(xs, t.alpha, t.n, 1, t.n - t.alpha);
  PolyMatrix inner = theta_matrix(t, 1, xs);
  PolyMatrix m(inner.rows() + 1, inner.cols());
  for (int c = 0; c < inner.cols(); ++c) {
    if (c <= t.alpha) m.at(0, c) = Poly::var({xs, t.alpha, c + 1});
    for (int r = 0; r < inner.rows(); ++r) m.at(r + 1, c) = inner.at(r, c);
  }
  return m;
}

PolyMatrix theta_matrix(const BDTriple& t, int k, Symbol xs) {
  PolyMatrix top = symbolic_block(xs, t.n + k - t.alpha, t.n, k, t.alpha + 1);
  return glue_columns(top, theta_lower(t, other(xs)));
}

PolyMatrix psi_matrix(const BDTriple& t, int m, Symbol ys) {
  PolyMatrix left = symbolic_block(ys, m, t.beta + 1, t.n + m - t.beta, t.n);
  return glue_rows(left, psi_right(t, other(ys)));
}

Poly theta_double(const BDTriple& t, int k);
Poly psi_double(const BDTriple& t, int m);

Poly theta_double(const BDTriple& t, int k) {
  Poly f = minor_det({t.n + k - t.alpha, t.n, k, t.alpha}, Symbol::X);
  Poly f_right = col_replace(f, t.n, t.alpha, t.alpha + 1, Symbol::X);
  Poly g = theta_nests(t) ? psi_double(t, 1) : minor_det({1, t.n - t.beta, t.beta + 1, t.n}, Symbol::Y);
  Poly g_left = col_replace(g, t.n, t.beta + 1, t.beta, Symbol::Y);
  return f * g - f_right * g_left;
}

Poly psi_double(const BDTriple& t, int m) {
  Poly f = minor_det({m, t.beta, t.n + m - t.beta, t.n}, Symbol::Y);
  Poly f_down = row_replace(f, t.n, t.beta, t.beta + 1, Symbol::Y);
  Poly g = psi_nests(t) ? theta_double(t, 1) : minor_det({t.alpha + 1, t.n, 1, t.n - t.alpha}, Symbol::X);
  Poly g_up = row_replace(g, t.n, t.alpha + 1, t.alpha, Symbol::X);
  return f * g - f_down * g_up;
}

}  // namespace

PolyMatrix build_Mtilde(const BDTriple& t, int i, int j, MatrixMode mode) {
  Label l{i, j};
  PolyMatrix m;
  if (is_first_family(t, l)) {
    m = theta_matrix(t, j, Symbol::X);
  } else if (is_second_family(t, l)) {
    m = psi_matrix(t, i, Symbol::Y);
  } else {
    throw std::invalid_argument("label " + l.to_string() + " is not special for this triple");
  }
  if (mode == MatrixMode::Diagonal) {
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) m.at(r, c) = identify_y_with_x(m.at(r, c));
    }
  }
  return m;
}

PolyMatrix build_Mtilde(const BDTriple& t, Label l, MatrixMode mode) { return build_Mtilde(t, l.row, l.col, mode); }

Poly theta(const BDTriple& t, int k, MatrixMode mode) {
  if (k < 1 || k > t.alpha) throw IndexOutOfRange("theta index outside [1,alpha]");
  Poly p = theta_double(t, k);
  return mode == MatrixMode::Diagonal ? identify_y_with_x(p) : p;
}

Poly psi(const BDTriple& t, int m, MatrixMode mode) {
  if (m < 1 || m > t.beta) throw IndexOutOfRange("psi index outside [1,beta]");
  Poly p = psi_double(t, m);
  return mode == MatrixMode::Diagonal ? identify_y_with_x(p) : p;
}

std::vector<ClusterFunction> standard_cluster(int n, GroupMode mode) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("n outside supported range");
  std::vector<ClusterFunction> out;
  for (Label l : cluster_labels(n, mode)) {
    ClusterFunction f;
    f.label = l;
    f.value = determinant(build_M(n, l.row, l.col));
    f.frozen = l.row == 1 || l.col == 1;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<ClusterFunction> initial_cluster(const BDTriple& t) {
  std::vector<ClusterFunction> out;
  for (Label l : cluster_labels(t.n, t.mode)) {
    ClusterFunction f;
    f.label = l;
    f.frozen = is_frozen(t, l);
    if (is_first_family(t, l)) {
      f.kind = FunctionKind::Theta;
      f.value = determinant(build_Mtilde(t, l));
    } else if (is_second_family(t, l)) {
      f.kind = FunctionKind::Psi;
      f.value = determinant(build_Mtilde(t, l));
    } else {
      f.value = determinant(build_M(t.n, l.row, l.col));
    }
    out.push_back(std::move(f));
  }
  return out;
}

const ClusterFunction& find_function(const std::vector<ClusterFunction>& cluster, Label l) {
  auto it = std::find_if(cluster.begin(), cluster.end(), [l](const ClusterFunction& f) { return f.label == l; });
  if (it == cluster.end()) throw std::out_of_range("no cluster function at " + l.to_string());
  return *it;
}

}  // namespace bdc
