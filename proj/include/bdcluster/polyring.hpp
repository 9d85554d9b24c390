#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bdc {

using Rational = mpq_class;

inline constexpr int kMaxN = 6;
inline constexpr int kVarsPerSymbol = kMaxN * kMaxN;
inline constexpr int kNumVars = 2 * kVarsPerSymbol;

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};
struct MissingAssignment : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ExponentOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

enum class Symbol : std::uint8_t { X = 0, Y = 1 };

// Ordered by symbol, then row, then column.
struct VarId {
  Symbol symbol = Symbol::X;
  int row = 1;
  int col = 1;

  int index() const {
    return static_cast<int>(symbol) * kVarsPerSymbol + (row - 1) * kMaxN + (col - 1);
  }
  static VarId from_index(int idx);
  std::string to_string() const;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId xvar(int i, int j) { return {Symbol::X, i, j}; }
inline VarId yvar(int i, int j) { return {Symbol::Y, i, j}; }

// Exponent vector indexed by VarId::index(). The array comparison is the
// lexicographic order with x[1,1] as the most significant variable.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial of(VarId v, int power = 1);

  int exponent(VarId v) const { return exps_[v.index()]; }
  int exponent_at(int idx) const { return exps_[idx]; }
  void set_exponent(VarId v, int e);
  int degree() const;
  bool is_one() const;
  bool has_symbol(Symbol s) const;

  Monomial operator*(const Monomial& o) const;
  std::optional<Monomial> divide(const Monomial& d) const;
  bool divisible_by(const Monomial& d) const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::array<std::uint8_t, kNumVars> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse polynomial with exact rational coefficients. Terms are kept in
// strictly decreasing monomial order with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static Poly var(VarId v);
  static Poly term(const Monomial& m, const Rational& c);
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;
  int total_degree() const;
  bool has_symbol(Symbol s) const;
  bool is_integral() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly mul_monomial(const Monomial& m, const Rational& c) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Accumulates sums of products without materializing each product.
class PolyAccumulator {
 public:
  PolyAccumulator();
  ~PolyAccumulator();
  PolyAccumulator(const PolyAccumulator&) = delete;
  PolyAccumulator& operator=(const PolyAccumulator&) = delete;

  void add_product(const Poly& a, const Poly& b, const Rational& scale = 1);
  void add(const Poly& a, const Rational& scale = 1);
  Poly finish();

 private:
  struct Impl;
  Impl* impl_;
};

using Assignment = std::map<VarId, Rational>;

Poly partial_derivative(const Poly& p, VarId v);
Rational evaluate(const Poly& p, const Assignment& values);
// Returns the quotient when q divides p exactly, nullopt otherwise.
std::optional<Poly> exact_divide(const Poly& p, const Poly& q);
std::optional<Rational> constant_value(const Poly& p);
// Replaces every y[i,j] with x[i,j].
Poly identify_y_with_x(const Poly& p);
Poly substitute_var(const Poly& p, VarId v, const Poly& value);

Poly parse_poly(std::string_view text);
std::string rational_to_string(const Rational& r);

class Ring {
 public:
  explicit Ring(int n);
  int n() const { return n_; }
  VarId var(Symbol s, int i, int j) const;
  Poly x(int i, int j) const { return Poly::var(var(Symbol::X, i, j)); }
  Poly y(int i, int j) const { return Poly::var(var(Symbol::Y, i, j)); }
  bool contains(const Poly& p) const;

 private:
  int n_;
};

}  // namespace bdc
