#include "bdcluster/poisson.hpp"

#include <numeric>
#include <sstream>

#include "bdcluster/parallel.hpp"

namespace bdc {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
  QMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& v = a.at(i, k);
      if (sgn(v) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += v * b.at(k, j);
    }
  }
  return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  QMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  QMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

R0Coefficients build_r0_standard(int n) {
  if (n < 2) throw std::invalid_argument("r0 needs n >= 2");
  R0Coefficients r{n, QMatrix(n - 1, n - 1)};
  for (int p = 0; p < n - 1; ++p) {
    r.c.at(p, p) = 1;
    if (p + 1 < n - 1) r.c.at(p + 1, p) = -1;
  }
  return r;
}

R0Coefficients build_r0(const BDTriple& t) {
  R0Coefficients r = build_r0_standard(t.n);
  if (t.beta == t.alpha + 1) return r;
  auto add = [&](int p, int q, int v) { r.c.at(p - 1, q - 1) += v; };
  add(t.alpha, t.beta, 1);
  add(t.beta - 1, t.alpha, 1);
  add(t.beta, t.alpha + 1, 1);
  add(t.beta, t.alpha, -1);
  add(t.alpha, t.beta - 1, -1);
  add(t.alpha + 1, t.beta, -1);
  return r;
}

namespace {

// s_k(p) = n - p when p >= k, else -p.
int s_entry(int n, int p, int k) { return p >= k ? n - p : -p; }

}  // namespace

Rational hhat_entry(int n, int p, int k) {
  if (p < 1 || p > n - 1 || k < 1 || k > n) throw IndexOutOfRange("dual basis index out of range");
  return Rational(s_entry(n, p, k), n);
}

RPlusOperator RPlusOperator::exotic(const BDTriple& t) { return {t.n, t.alpha, t.beta, true, build_r0(t)}; }

RPlusOperator RPlusOperator::standard(const BDTriple& t) { return {t.n, t.alpha, t.beta, false, build_r0(t)}; }

RPlusOperator RPlusOperator::standard(int n) { return {n, 0, 0, false, build_r0_standard(n)}; }

RPlusOperator RPlusOperator::custom(int n, int alpha, int beta, bool exotic, R0Coefficients r0) {
  return {n, alpha, beta, exotic, std::move(r0)};
}

RPlusOperator::RPlusOperator(int n, int alpha, int beta, bool exotic, R0Coefficients r0)
    : n_(n), alpha_(alpha), beta_(beta), exotic_(exotic), r0_(std::move(r0)), diag_(n, n) {
  if (r0_.n != n || r0_.c.rows() != n - 1 || r0_.c.cols() != n - 1) {
    throw std::invalid_argument("r0 coefficients do not match n");
  }
  if (exotic_ && (alpha_ < 1 || alpha_ >= beta_ || beta_ > n - 1)) {
    throw InvalidTriple("exotic operator needs 1 <= alpha < beta <= n-1");
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      Rational sum = 0;
      for (int p = 1; p < n; ++p) {
        int sk = s_entry(n, p, k);
        if (sk == 0) continue;
        for (int q = 1; q < n; ++q) {
          const Rational& c = r0_.c.at(p - 1, q - 1);
          if (sgn(c) != 0) sum += c * sk * s_entry(n, q, l);
        }
      }
      diag_.at(k - 1, l - 1) = sum / (n * n);
    }
  }
}

QMatrix RPlusOperator::apply(const QMatrix& eta) const {
  if (eta.rows() != n_ || eta.cols() != n_) throw std::invalid_argument("argument must be n x n");
  QMatrix out(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) out.at(i, j) = eta.at(i, j);
  }
  for (int k = 0; k < n_; ++k) {
    if (sgn(eta.at(k, k)) == 0) continue;
    for (int l = 0; l < n_; ++l) out.at(l, l) += eta.at(k, k) * diag_.at(k, l);
  }
  if (exotic_) {
    int a = alpha_ - 1, b = beta_ - 1;
    out.at(b, b + 1) += eta.at(a, a + 1);
    out.at(a + 1, a) -= eta.at(b + 1, b);
  }
  return out;
}

QMatrix RPlusOperator::matrix() const {
  const int m = n_ * n_;
  QMatrix out(m, m);
  for (int k = 0; k < n_; ++k) {
    for (int l = 0; l < n_; ++l) {
      QMatrix e(n_, n_);
      e.at(k, l) = 1;
      QMatrix image = apply(e);
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) out.at(i * n_ + j, k * n_ + l) = image.at(i, j);
      }
    }
  }
  return out;
}

std::vector<Rational> r_diag_closed_form(const BDTriple& t, int k) {
  const int n = t.n;
  auto h = [n](int p) {
    std::vector<Rational> v(n, 0);
    if (p < 1 || p > n - 1) return v;
    for (int l = 1; l <= n; ++l) v[l - 1] = Rational(s_entry(n, p, l), n);
    return v;
  };
  std::vector<Rational> out(n, 0);
  auto add = [&](const Rational& w, int p) {
    auto v = h(p);
    for (int l = 0; l < n; ++l) out[l] += w * v[l];
  };
  auto s = [&](int p) { return Rational(s_entry(n, p, k)); };
  for (int p = 1; p < n; ++p) {
    add(s(p), p);
    add(-s(p), p - 1);
  }
  if (t.beta > t.alpha + 1) {
    add(s(t.beta - 1) - s(t.beta), t.alpha);
    add(s(t.alpha) - s(t.alpha + 1), t.beta);
    add(s(t.beta), t.alpha + 1);
    add(-s(t.alpha), t.beta - 1);
  }
  for (auto& v : out) v /= n;
  return out;
}

RTensor RTensor::flipped() const {
  RTensor f(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) f.at(k, l, i, j) = at(i, j, k, l);
  return f;
}

RTensor operator+(const RTensor& a, const RTensor& b) {
  RTensor s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

RTensor build_r_tensor(const RPlusOperator& op) {
  const int n = op.n();
  RTensor r(n);
  const QMatrix& c = op.r0().c;
  for (int p = 1; p < n; ++p) {
    for (int q = 1; q < n; ++q) {
      const Rational& w = c.at(p - 1, q - 1);
      if (sgn(w) == 0) continue;
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          r.at(k - 1, k - 1, l - 1, l - 1) += w * hhat_entry(n, p, k) * hhat_entry(n, q, l);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) r.at(j, i, i, j) += 1;
  }
  if (op.is_exotic()) {
    int a = op.alpha() - 1, b = op.beta() - 1;
    r.at(a + 1, a, b, b + 1) += 1;
    r.at(b, b + 1, a + 1, a) -= 1;
  }
  return r;
}

RTensor build_r_tensor(const BDTriple& t, bool standard) {
  return build_r_tensor(standard ? RPlusOperator::standard(t) : RPlusOperator::exotic(t));
}

RTensor sl_casimir(int n) {
  RTensor t(n);
  Rational inv(1, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t.at(i, j, j, i) += 1;
      t.at(i, i, j, j) -= inv;
    }
  }
  return t;
}

QMatrix r_plus_oracle(const RTensor& r, const QMatrix& eta) {
  const int n = r.n();
  QMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (sgn(eta.at(j, i)) == 0) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Rational& v = r.at(i, j, k, l);
          if (sgn(v) != 0) out.at(k, l) += v * eta.at(j, i);
        }
    }
  return out;
}

CybeReport verify_cybe(const RTensor& r) {
  const int n = r.n();
  struct Entry {
    int i, j, k, l;
    Rational v;
  };
  std::vector<Entry> nz;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (sgn(r.at(i, j, k, l)) != 0) nz.push_back({i, j, k, l, r.at(i, j, k, l)});

  std::vector<Rational> out(static_cast<std::size_t>(n) * n * n * n * n * n);
  auto idx = [n](int a, int b, int c, int d, int e, int f) {
    return ((((static_cast<std::size_t>(a) * n + b) * n + c) * n + d) * n + e) * n + f;
  };
  for (const auto& s : nz) {
    for (const auto& t : nz) {
      Rational w = s.v * t.v;
      // [x_s, x_t] (x) y_s (x) y_t
      if (s.j == t.i) out[idx(s.i, t.j, s.k, s.l, t.k, t.l)] += w;
      if (t.j == s.i) out[idx(t.i, s.j, s.k, s.l, t.k, t.l)] -= w;
      // x_s (x) [y_s, x_t] (x) y_t
      if (s.l == t.i) out[idx(s.i, s.j, s.k, t.j, t.k, t.l)] += w;
      if (t.j == s.k) out[idx(s.i, s.j, t.i, s.l, t.k, t.l)] -= w;
      // x_s (x) x_t (x) [y_s, y_t]
      if (s.l == t.k) out[idx(s.i, s.j, t.i, t.j, s.k, t.l)] += w;
      if (t.l == s.k) out[idx(s.i, s.j, t.i, t.j, t.k, s.l)] -= w;
    }
  }
  CybeReport rep;
  for (std::size_t p = 0; p < out.size(); ++p) {
    if (sgn(out[p]) == 0) continue;
    ++rep.nonzero_entries;
    if (rep.satisfied) {
      rep.satisfied = false;
      rep.witness_value = out[p];
      std::size_t q = p;
      std::vector<int> w(6);
      for (int d = 5; d >= 0; --d) {
        w[d] = static_cast<int>(q % n) + 1;
        q /= n;
      }
      rep.witness = w;
    }
  }
  return rep;
}

BracketData prepare_bracket(const Poly& f, int n) {
  if (f.has_symbol(Symbol::Y)) throw std::invalid_argument("bracket arguments must be polynomials in x");
  BracketData d;
  d.n = n;
  std::vector<Poly> partial(static_cast<std::size_t>(n) * n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) partial[(a - 1) * n + (b - 1)] = partial_derivative(f, xvar(a, b));
  }
  auto dx = [&](int a, int b) -> const Poly& { return partial[(a - 1) * n + (b - 1)]; };
  d.right.resize(static_cast<std::size_t>(n) * n);
  d.left.resize(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Poly r, l;
      for (int k = 1; k <= n; ++k) {
        if (!dx(k, i).is_zero()) r += dx(k, i).mul_monomial(Monomial::of(xvar(k, j)), 1);
        if (!dx(j, k).is_zero()) l += dx(j, k).mul_monomial(Monomial::of(xvar(i, k)), 1);
      }
      d.right[(i - 1) * n + (j - 1)] = std::move(r);
      d.left[(i - 1) * n + (j - 1)] = std::move(l);
    }
  }
  return d;
}

namespace {

mpz_class denominator_lcm(const QMatrix& m) {
  mpz_class l = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
  return l;
}

// <R_+(F), G> accumulated with the given sign.
void pair_half(const std::vector<Poly>& F, const std::vector<Poly>& G, const RPlusOperator& op, int sign,
               PolyAccumulator& acc, PolyAccumulator& diag_acc, const mpz_class& scale) {
  const int n = op.n();
  auto at = [n](const std::vector<Poly>& v, int i, int j) -> const Poly& { return v[i * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) acc.add_product(at(F, i, j), at(G, j, i), sign);
  }
  const QMatrix& D = op.diag_action();
  for (int l = 0; l < n; ++l) {
    if (at(G, l, l).is_zero()) continue;
    Poly h;
    for (int k = 0; k < n; ++k) {
      if (sgn(D.at(k, l)) == 0 || at(F, k, k).is_zero()) continue;
      h += at(F, k, k) * Rational(D.at(k, l) * scale);
    }
    diag_acc.add_product(h, at(G, l, l), sign);
  }
  if (op.is_exotic()) {
    int a = op.alpha() - 1, b = op.beta() - 1;
    acc.add_product(at(F, a, a + 1), at(G, b + 1, b), sign);
    acc.add_product(at(F, b + 1, b), at(G, a, a + 1), -sign);
  }
}

}  // namespace

Poly sklyanin_bracket(const BracketData& f, const BracketData& g, const RPlusOperator& op) {
  if (f.n != op.n() || g.n != op.n()) throw std::invalid_argument("bracket data prepared for a different n");
  mpz_class scale = denominator_lcm(op.diag_action());
  PolyAccumulator acc, diag_acc;
  pair_half(f.right, g.right, op, 1, acc, diag_acc, scale);
  pair_half(f.left, g.left, op, -1, acc, diag_acc, scale);
  Poly out = acc.finish();
  out += diag_acc.finish() * Rational(1, scale);
  return out;
}

Poly sklyanin_bracket(const Poly& f, const Poly& g, const RPlusOperator& op) {
  return sklyanin_bracket(prepare_bracket(f, op.n()), prepare_bracket(g, op.n()), op);
}

std::optional<Rational> poisson_coefficient(const Poly& f, const Poly& g, const Poly& bracket) {
  if (f.is_zero() || g.is_zero()) throw DivisionByZero("coefficient against a zero function");
  if (bracket.is_zero()) return Rational(0);
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  const Term& lb = bracket.leading_term();
  // The quotient is constant exactly when the leading terms line up and the
  // remainder vanishes.
  if (lb.mono != lf.mono * lg.mono || bracket.size() > f.size() * g.size()) return std::nullopt;
  Rational w = lb.coeff / (lf.coeff * lg.coeff);
  if (bracket == (f * g) * w) return w;
  return std::nullopt;
}

std::optional<Rational> poisson_coefficient(const Poly& f, const Poly& g, const RPlusOperator& op) {
  return poisson_coefficient(f, g, sklyanin_bracket(f, g, op));
}

OmegaSweep sweep_omega(const std::vector<ClusterFunction>& cluster, const RPlusOperator& op) {
  OmegaSweep out;
  const std::size_t m = cluster.size();
  for (const auto& f : cluster) out.labels.push_back(f.label);
  out.omega = QMatrix(static_cast<int>(m), static_cast<int>(m));

  std::vector<BracketData> data(m);
  parallel_for(m, [&](std::size_t i) { data[i] = prepare_bracket(cluster[i].value, op.n()); });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
  out.pairs = pairs.size();

  std::vector<std::optional<Rational>> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    auto [a, b] = pairs[p];
    Poly br = sklyanin_bracket(data[a], data[b], op);
    results[p] = poisson_coefficient(cluster[a].value, cluster[b].value, br);
  });

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [a, b] = pairs[p];
    if (!results[p]) {
      out.failures.push_back({cluster[a].label, cluster[b].label});
      continue;
    }
    out.omega.at(static_cast<int>(a), static_cast<int>(b)) = *results[p];
    out.omega.at(static_cast<int>(b), static_cast<int>(a)) = -*results[p];
  }
  return out;
}

OmegaMatrix omega_matrix(const std::vector<ClusterFunction>& cluster, const RPlusOperator& op) {
  OmegaSweep s = sweep_omega(cluster, op);
  if (!s.failures.empty()) throw NotLogCanonical(s.failures.front().first, s.failures.front().second);
  return {std::move(s.labels), std::move(s.omega)};
}

}  // namespace bdc
