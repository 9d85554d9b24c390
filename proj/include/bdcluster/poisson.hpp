#pragma once

#include <optional>
#include <vector>

#include "bdcluster/bdseed.hpp"

namespace bdc {

// Dense rational matrix with zero-based indexing.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;
  QMatrix transposed() const;
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Coefficients c_pq of r0 = sum c_pq hhat_p (x) hhat_q, indexed by simple
// roots 1..n-1 (stored zero-based).
struct R0Coefficients {
  int n = 0;
  QMatrix c;
};

R0Coefficients build_r0_standard(int n);
R0Coefficients build_r0(const BDTriple& t);

// (hhat_p)_{kk} = s_k(p) / n, the dual basis of the simple coroots.
Rational hhat_entry(int n, int p, int k);

class RPlusOperator {
 public:
  // Triple-dependent R_+ including the exotic correction.
  static RPlusOperator exotic(const BDTriple& t);
  // Same r0 as the triple, without the exotic correction.
  static RPlusOperator standard(const BDTriple& t);
  static RPlusOperator standard(int n);
  static RPlusOperator custom(int n, int alpha, int beta, bool exotic, R0Coefficients r0);

  int n() const { return n_; }
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  bool is_exotic() const { return exotic_; }
  const R0Coefficients& r0() const { return r0_; }

  // diag_action().at(k, l) is the (l,l) entry of R_0(e_kk).
  const QMatrix& diag_action() const { return diag_; }
  QMatrix apply(const QMatrix& eta) const;
  // n^2 x n^2 matrix acting on row-major vectorized arguments.
  QMatrix matrix() const;

 private:
  RPlusOperator(int n, int alpha, int beta, bool exotic, R0Coefficients r0);

  int n_;
  int alpha_;
  int beta_;
  bool exotic_;
  R0Coefficients r0_;
  QMatrix diag_;
};

// Closed form of R_0(e_kk) as diagonal entries, derived independently of the
// r0 coefficients.
std::vector<Rational> r_diag_closed_form(const BDTriple& t, int k);

// Element of gl_n (x) gl_n in the basis e_ij (x) e_kl, zero-based indices.
class RTensor {
 public:
  explicit RTensor(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n) {}
  int n() const { return n_; }
  Rational& at(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }
  const Rational& at(int i, int j, int k, int l) const { return data_[index(i, j, k, l)]; }
  RTensor flipped() const;
  friend RTensor operator+(const RTensor& a, const RTensor& b);
  friend bool operator==(const RTensor& a, const RTensor& b) = default;

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_;
  std::vector<Rational> data_;
};

RTensor build_r_tensor(const RPlusOperator& op);
RTensor build_r_tensor(const BDTriple& t, bool standard = false);
// Casimir of sl_n for the trace form: sum e_ij (x) e_ji - (1/n) I (x) I.
RTensor sl_casimir(int n);
// R_+(eta) recovered from <R_+(eta), zeta> = <r, eta (x) zeta>.
QMatrix r_plus_oracle(const RTensor& r, const QMatrix& eta);

struct CybeReport {
  bool satisfied = true;
  std::size_t nonzero_entries = 0;
  // First nonzero entry of [[r,r]] as (i1,j1,i2,j2,i3,j3), one-based.
  std::vector<int> witness;
  Rational witness_value = 0;
};

CybeReport verify_cybe(const RTensor& r);

// Entries of grad(f) X and X grad(f), reused across brackets.
struct BracketData {
  int n = 0;
  std::vector<Poly> right;  // (grad f . X)_ij, row-major
  std::vector<Poly> left;   // (X . grad f)_ij, row-major
};

BracketData prepare_bracket(const Poly& f, int n);
Poly sklyanin_bracket(const BracketData& f, const BracketData& g, const RPlusOperator& op);
Poly sklyanin_bracket(const Poly& f, const Poly& g, const RPlusOperator& op);

// {f,g} / (f g) when that ratio is a constant.
std::optional<Rational> poisson_coefficient(const Poly& f, const Poly& g, const Poly& bracket);
std::optional<Rational> poisson_coefficient(const Poly& f, const Poly& g, const RPlusOperator& op);

struct NotLogCanonical : std::runtime_error {
  NotLogCanonical(Label a, Label b)
      : std::runtime_error("pair " + a.to_string() + "," + b.to_string() + " is not log-canonical"),
        first(a), second(b) {}
  Label first;
  Label second;
};

struct OmegaMatrix {
  std::vector<Label> labels;
  QMatrix omega;
};

struct PairFailure {
  Label first;
  Label second;
};

struct OmegaSweep {
  std::vector<Label> labels;
  QMatrix omega;
  std::vector<PairFailure> failures;
  std::size_t pairs = 0;
};

// Computes omega for every unordered pair and records the pairs whose bracket
// is not a constant multiple of the product.
OmegaSweep sweep_omega(const std::vector<ClusterFunction>& cluster, const RPlusOperator& op);
// Throws NotLogCanonical on the first failing pair in label order.
OmegaMatrix omega_matrix(const std::vector<ClusterFunction>& cluster, const RPlusOperator& op);

}  // namespace bdc
