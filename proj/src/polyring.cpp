#include "bdcluster/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace bdc {

namespace {

constexpr long kSmallBound = 1L << 31;

bool small_int(const Rational& r, long* out) {
  if (mpz_cmp_ui(r.get_den_mpz_t(), 1) != 0) return false;
  if (!mpz_fits_slong_p(r.get_num_mpz_t())) return false;
  long v = mpz_get_si(r.get_num_mpz_t());
  if (v <= -kSmallBound || v >= kSmallBound) return false;
  *out = v;
  return true;
}

bool all_small(const Poly& p) {
  long v = 0;
  for (const auto& t : p.terms()) {
    if (!small_int(t.coeff, &v)) return false;
  }
  return true;
}

Rational from_int128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  mpz_class z(static_cast<unsigned long>(u >> 64));
  z <<= 64;
  z += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
  if (neg) z = -z;
  return Rational(z);
}

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
}

template <typename F>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, F combine) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, combine(Rational(0), b[j].coeff)});
      ++j;
    } else {
      Rational c = combine(a[i].coeff, b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

VarId VarId::from_index(int idx) {
  if (idx < 0 || idx >= kNumVars) throw IndexOutOfRange("variable index out of range");
  VarId v;
  v.symbol = idx >= kVarsPerSymbol ? Symbol::Y : Symbol::X;
  int r = idx % kVarsPerSymbol;
  v.row = r / kMaxN + 1;
  v.col = r % kMaxN + 1;
  return v;
}

std::string VarId::to_string() const {
  std::ostringstream os;
  os << (symbol == Symbol::X ? 'x' : 'y') << '[' << row << ',' << col << ']';
  return os.str();
}

Monomial Monomial::of(VarId v, int power) {
  Monomial m;
  m.set_exponent(v, power);
  return m;
}

void Monomial::set_exponent(VarId v, int e) {
  if (v.row < 1 || v.row > kMaxN || v.col < 1 || v.col > kMaxN)
    throw IndexOutOfRange("variable " + v.to_string() + " outside supported range");
  if (e < 0 || e > std::numeric_limits<std::uint8_t>::max())
    throw ExponentOverflow("exponent out of range");
  exps_[v.index()] = static_cast<std::uint8_t>(e);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::has_symbol(Symbol s) const {
  auto first = exps_.begin() + static_cast<int>(s) * kVarsPerSymbol;
  return std::any_of(first, first + kVarsPerSymbol, [](auto e) { return e != 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) {
    int e = exps_[i] + o.exps_[i];
    if (e > std::numeric_limits<std::uint8_t>::max()) throw ExponentOverflow("exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

bool Monomial::divisible_by(const Monomial& d) const {
  for (int i = 0; i < kNumVars; ++i) {
    if (exps_[i] < d.exps_[i]) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::divide(const Monomial& d) const {
  if (!divisible_by(d)) return std::nullopt;
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exps_[i] = exps_[i] - d.exps_[i];
  return r;
}

std::size_t Monomial::hash() const {
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(exps_.data()), exps_.size()));
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += VarId::from_index(i).to_string();
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial(), c});
}

Poly Poly::var(VarId v) { return term(Monomial::of(v), 1); }

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  sort_terms(terms);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Poly::has_symbol(Symbol s) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [s](const Term& t) { return t.mono.has_symbol(s); });
}

bool Poly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return mpz_cmp_ui(t.coeff.get_den_mpz_t(), 1) == 0;
  });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const Rational& a, const Rational& b) { return Rational(a + b); });
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, [](const Rational& a, const Rational& b) { return Rational(a - b); });
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
  Poly r;
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  PolyAccumulator acc;
  acc.add_product(a, b);
  return acc.finish();
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = sgn(t.coeff) < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += t.mono.to_string();
    } else {
      out += rational_to_string(mag) + '*' + t.mono.to_string();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

struct PolyAccumulator::Impl {
  std::unordered_map<Monomial, __int128, MonomialHash> ints;
  std::unordered_map<Monomial, Rational, MonomialHash> rats;
};

PolyAccumulator::PolyAccumulator() : impl_(new Impl) {}
PolyAccumulator::~PolyAccumulator() { delete impl_; }

void PolyAccumulator::add_product(const Poly& a, const Poly& b, const Rational& scale) {
  if (a.is_zero() || b.is_zero() || sgn(scale) == 0) return;
  long s = 0;
  if (small_int(scale, &s) && all_small(a) && all_small(b)) {
    std::vector<long> bc;
    bc.reserve(b.size());
    for (const auto& t : b.terms()) bc.push_back(mpz_get_si(t.coeff.get_num_mpz_t()));
    impl_->ints.reserve(impl_->ints.size() + a.size() * b.size() / 2);
    for (const auto& ta : a.terms()) {
      __int128 ca = static_cast<__int128>(mpz_get_si(ta.coeff.get_num_mpz_t())) * s;
      for (std::size_t j = 0; j < b.size(); ++j) {
        impl_->ints[ta.mono * b.terms()[j].mono] += ca * bc[j];
      }
    }
    return;
  }
  for (const auto& ta : a.terms()) {
    Rational ca = ta.coeff * scale;
    for (const auto& tb : b.terms()) impl_->rats[ta.mono * tb.mono] += ca * tb.coeff;
  }
}

void PolyAccumulator::add(const Poly& a, const Rational& scale) {
  if (sgn(scale) == 0) return;
  for (const auto& t : a.terms()) impl_->rats[t.mono] += t.coeff * scale;
}

Poly PolyAccumulator::finish() {
  std::vector<Term> terms;
  terms.reserve(impl_->ints.size() + impl_->rats.size());
  for (auto& [m, c] : impl_->ints) {
    if (c == 0) continue;
    auto it = impl_->rats.find(m);
    if (it != impl_->rats.end()) {
      it->second += from_int128(c);
    } else {
      terms.push_back({m, from_int128(c)});
    }
  }
  for (auto& [m, c] : impl_->rats) {
    if (sgn(c) != 0) terms.push_back({m, std::move(c)});
  }
  impl_->ints.clear();
  impl_->rats.clear();
  sort_terms(terms);
  Poly p = Poly::from_terms(std::move(terms));
  return p;
}

Poly partial_derivative(const Poly& p, VarId v) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    int e = t.mono.exponent(v);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exponent(v, e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Lowering one exponent preserves the relative order of the surviving terms.
  return Poly::from_terms(std::move(out));
}

Rational evaluate(const Poly& p, const Assignment& values) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational prod = t.coeff;
    for (int i = 0; i < kNumVars; ++i) {
      int e = t.mono.exponent_at(i);
      if (e == 0) continue;
      VarId v = VarId::from_index(i);
      auto it = values.find(v);
      if (it == values.end()) throw MissingAssignment("no value for " + v.to_string());
      for (int k = 0; k < e; ++k) prod *= it->second;
    }
    sum += prod;
  }
  return sum;
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (p.is_zero()) return Poly();
  const Term& lq = q.leading_term();
  if (q.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      auto m = t.mono.divide(lq.mono);
      if (!m) return std::nullopt;
      out.push_back({*m, t.coeff / lq.coeff});
    }
    return Poly::from_terms(std::move(out));
  }
  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto lead = rem.begin();
    auto m = lead->first.divide(lq.mono);
    if (!m) return std::nullopt;
    Rational c = lead->second / lq.coeff;
    rem.erase(lead);
    for (std::size_t k = 1; k < q.size(); ++k) {
      const Term& t = q.terms()[k];
      auto [it, inserted] = rem.try_emplace(t.mono * *m, 0);
      it->second -= c * t.coeff;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quot.push_back({*m, std::move(c)});
  }
  return Poly::from_terms(std::move(quot));
}

std::optional<Rational> constant_value(const Poly& p) {
  if (p.is_zero()) return Rational(0);
  if (p.size() == 1 && p.terms()[0].mono.is_one()) return p.terms()[0].coeff;
  return std::nullopt;
}

Poly identify_y_with_x(const Poly& p) {
  if (!p.has_symbol(Symbol::Y)) return p;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (int i = 0; i < kVarsPerSymbol; ++i) {
      int e = t.mono.exponent_at(i) + t.mono.exponent_at(i + kVarsPerSymbol);
      if (e) m.set_exponent(VarId::from_index(i), e);
    }
    out.push_back({m, t.coeff});
  }
  return Poly::from_terms(std::move(out));
}

Poly substitute_var(const Poly& p, VarId v, const Poly& value) {
  std::vector<Poly> powers{Poly(1)};
  PolyAccumulator acc;
  for (const auto& t : p.terms()) {
    int e = t.mono.exponent(v);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Monomial m = t.mono;
    m.set_exponent(v, 0);
    acc.add_product(Poly::term(m, t.coeff), powers[e]);
  }
  return acc.finish();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly parse() {
    std::vector<Term> terms;
    skip();
    if (at_end()) throw ParseError("empty polynomial");
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = get() == '-';
      skip();
    }
    terms.push_back(parse_term(neg));
    skip();
    while (!at_end()) {
      char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      skip();
      terms.push_back(parse_term(c == '-'));
      skip();
    }
    return Poly::from_terms(std::move(terms));
  }

 private:
  Term parse_term(bool neg) {
    Rational coeff = 1;
    Monomial mono;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_rational();
      skip();
      need_factor = false;
      if (!at_end() && peek() == '*') {
        get();
        skip();
        need_factor = true;
      } else {
        return {mono, neg ? Rational(-coeff) : coeff};
      }
    }
    if (need_factor) parse_factor(mono);
    skip();
    while (!at_end() && peek() == '*') {
      get();
      skip();
      parse_factor(mono);
      skip();
    }
    return {mono, neg ? Rational(-coeff) : coeff};
  }

  void parse_factor(Monomial& mono) {
    char c = get();
    if (c != 'x' && c != 'y') fail("expected variable");
    Symbol s = c == 'x' ? Symbol::X : Symbol::Y;
    expect('[');
    int i = parse_int();
    expect(',');
    int j = parse_int();
    expect(']');
    int e = 1;
    skip();
    if (!at_end() && peek() == '^') {
      get();
      skip();
      e = parse_int();
    }
    VarId v{s, i, j};
    mono.set_exponent(v, mono.exponent(v) + e);
  }

  Rational parse_rational() {
    std::string digits = parse_digits();
    skip();
    if (!at_end() && peek() == '/') {
      get();
      skip();
      std::string den = parse_digits();
      if (mpz_class(den) == 0) throw ParseError("zero denominator");
      Rational r{mpz_class(digits), mpz_class(den)};
      r.canonicalize();
      return r;
    }
    return Rational(mpz_class(digits));
  }

  std::string parse_digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  int parse_int() {
    skip();
    std::string d = parse_digits();
    skip();
    if (d.size() > 4) fail("integer too large");
    return std::stoi(d);
  }

  void expect(char c) {
    skip();
    if (at_end() || get() != c) fail(std::string("expected '") + c + "'");
    skip();
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

Ring::Ring(int n) : n_(n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("ring size must be in [1," + std::to_string(kMaxN) + "]");
}

VarId Ring::var(Symbol s, int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw IndexOutOfRange("index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside [1," + std::to_string(n_) + "]");
  }
  return {s, i, j};
}

bool Ring::contains(const Poly& p) const {
  for (const auto& t : p.terms()) {
    for (int i = 0; i < kNumVars; ++i) {
      if (t.mono.exponent_at(i) == 0) continue;
      VarId v = VarId::from_index(i);
      if (v.row > n_ || v.col > n_) return false;
    }
  }
  return true;
}

}  // namespace bdc
