#include "bdcluster/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace bdc {

Quiver::Quiver(int n, GroupMode mode) : n_(n), mode_(mode), nodes_(cluster_labels(n, mode)) {}

bool Quiver::has_node(Label l) const { return std::find(nodes_.begin(), nodes_.end(), l) != nodes_.end(); }

void Quiver::set_frozen(Label l, bool frozen) {
  if (!has_node(l)) throw std::out_of_range("no vertex " + l.to_string());
  if (frozen) {
    frozen_.insert(l);
  } else {
    frozen_.erase(l);
  }
}

std::vector<Label> Quiver::mutable_nodes() const {
  std::vector<Label> out;
  for (Label l : nodes_) {
    if (!is_frozen(l)) out.push_back(l);
  }
  return out;
}

std::vector<Label> Quiver::frozen_nodes() const {
  std::vector<Label> out;
  for (Label l : nodes_) {
    if (is_frozen(l)) out.push_back(l);
  }
  return out;
}

void Quiver::add_arc(Label a, Label b, int w) {
  if (!has_node(a) || !has_node(b)) throw std::out_of_range("arc endpoint outside the quiver");
  if (a == b) throw std::invalid_argument("loops are not allowed");
  auto rev = arcs_.find({b, a});
  if (rev != arcs_.end()) {
    int cancel = std::min(rev->second, w);
    rev->second -= cancel;
    w -= cancel;
    if (rev->second == 0) arcs_.erase(rev);
  }
  if (w > 0) arcs_[{a, b}] += w;
}

int Quiver::weight(Label a, Label b) const {
  auto it = arcs_.find({a, b});
  return it == arcs_.end() ? 0 : it->second;
}

Quiver standard_quiver(int n, GroupMode mode) {
  Quiver q(n, mode);
  for (Label l : q.nodes()) {
    if (l.row == 1 || l.col == 1) q.set_frozen(l, true);
  }
  auto link = [&](Label a, Label b) {
    if (!q.has_node(a) || !q.has_node(b)) return;
    if (q.is_frozen(a) && q.is_frozen(b)) return;
    q.add_arc(a, b);
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j < n) link({i, j}, {i, j + 1});
      if (i < n) link({i, j}, {i + 1, j});
      if (i < n && j < n) link({i + 1, j + 1}, {i, j});
    }
  }
  return q;
}

Quiver bd_quiver(const BDTriple& t) {
  const int n = t.n, a = t.alpha, b = t.beta;
  Quiver q = standard_quiver(n, t.mode);
  q.set_frozen({a + 1, 1}, false);
  q.set_frozen({1, b + 1}, false);
  auto link = [&](Label from, Label to) {
    if (q.has_node(from) && q.has_node(to)) q.add_arc(from, to);
  };
  link({a, 1}, {a + 1, 1});
  link({1, b}, {1, b + 1});
  link({n, a + 1}, {1, b + 1});
  link({1, b + 1}, {n, a});
  link({b + 1, n}, {a + 1, 1});
  link({a + 1, 1}, {b, n});
  return q;
}

int ExchangeMatrix::row_index(Label l) const {
  auto it = std::find(rows.begin(), rows.end(), l);
  if (it == rows.end()) throw std::out_of_range("no mutable vertex " + l.to_string());
  return static_cast<int>(it - rows.begin());
}

int ExchangeMatrix::col_index(Label l) const {
  auto it = std::find(cols.begin(), cols.end(), l);
  if (it == cols.end()) throw std::out_of_range("no vertex " + l.to_string());
  return static_cast<int>(it - cols.begin());
}

ExchangeMatrix to_exchange_matrix(const Quiver& q) {
  ExchangeMatrix m;
  m.rows = q.mutable_nodes();
  m.cols = m.rows;
  for (Label l : q.frozen_nodes()) m.cols.push_back(l);
  m.b.assign(m.rows.size(), std::vector<int>(m.cols.size(), 0));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
      m.b[r][c] = q.weight(m.rows[r], m.cols[c]) - q.weight(m.cols[c], m.rows[r]);
    }
  }
  return m;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, Label k) {
  if (std::find(m.rows.begin(), m.rows.end(), k) == m.rows.end()) {
    if (std::find(m.cols.begin(), m.cols.end(), k) != m.cols.end()) throw FrozenDirection(k);
    throw std::out_of_range("no vertex " + k.to_string());
  }
  const int rk = m.row_index(k), ck = m.col_index(k);
  ExchangeMatrix out = m;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
      if (static_cast<int>(i) == rk || static_cast<int>(j) == ck) {
        out.b[i][j] = -m.b[i][j];
        continue;
      }
      int bik = m.b[i][ck], bkj = m.b[rk][j];
      out.b[i][j] = m.b[i][j] + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
    }
  }
  return out;
}

bool principal_part_skew_symmetric(const ExchangeMatrix& m) {
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = 0; j < m.rows.size(); ++j) {
      if (m.b[i][j] != -m.b[j][i]) return false;
    }
  }
  return true;
}

int rank(const ExchangeMatrix& m) {
  // Fraction-free elimination.
  std::vector<std::vector<mpz_class>> a;
  for (const auto& row : m.b) {
    std::vector<mpz_class> r;
    for (int v : row) r.emplace_back(v);
    a.push_back(std::move(r));
  }
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rk = 0;
  mpz_class prev = 1;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r) {
      if (sgn(a[r][c]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rk]);
    for (int r = rk + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j) {
        a[r][j] = (a[rk][c] * a[r][j] - a[r][c] * a[rk][j]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

Seed make_seed(const std::vector<ClusterFunction>& cluster, const Quiver& q) {
  Seed s;
  s.exchange = to_exchange_matrix(q);
  for (Label l : s.exchange.cols) {
    ClusterFunction f = find_function(cluster, l);
    f.frozen = q.is_frozen(l);
    s.cluster.push_back(std::move(f));
  }
  return s;
}

Seed initial_seed(const BDTriple& t) { return make_seed(initial_cluster(t), bd_quiver(t)); }

Seed standard_seed(int n, GroupMode mode) { return make_seed(standard_cluster(n, mode), standard_quiver(n, mode)); }

namespace {

Poly power(const Poly& p, int e) {
  Poly r(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

Poly exchange_numerator(const Seed& s, Label k) {
  const auto& row = s.exchange.b[s.exchange.row_index(k)];
  Poly plus(1), minus(1);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] > 0) plus *= power(s.cluster[j].value, row[j]);
    if (row[j] < 0) minus *= power(s.cluster[j].value, -row[j]);
  }
  return plus + minus;
}

MutationResult mutate_seed(const Seed& s, Label k) {
  ExchangeMatrix next = mutate_matrix(s.exchange, k);
  Poly numerator = exchange_numerator(s, k);
  const int ck = s.exchange.col_index(k);
  auto q = exact_divide(numerator, s.cluster[ck].value);
  if (!q) throw NotLaurentPolynomial(k, numerator.to_string());
  MutationResult r;
  r.seed.cluster = s.cluster;
  r.seed.cluster[ck].value = *q;
  r.seed.cluster[ck].kind = FunctionKind::Mutated;
  r.seed.exchange = std::move(next);
  r.exchanged = std::move(*q);
  return r;
}

std::string to_dot(const Quiver& q) {
  auto id = [](Label l) { return "\"" + std::to_string(l.row) + "," + std::to_string(l.col) + "\""; };
  std::ostringstream os;
  os << "digraph Q {\n";
  for (Label l : q.nodes()) {
    os << "  " << id(l) << " [label=\"" << l.to_string() << "\", shape=" << (q.is_frozen(l) ? "box" : "circle")
       << "];\n";
  }
  for (const auto& [arc, w] : q.arcs()) {
    os << "  " << id(arc.first) << " -> " << id(arc.second) << " [weight=" << w << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace bdc
