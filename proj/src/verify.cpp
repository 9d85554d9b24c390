#include "bdcluster/verify.hpp"

#include <algorithm>
#include <chrono>

#include "bdcluster/parallel.hpp"

namespace bdc {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

VerificationReport new_report(std::string name, const Fixture& fx) {
  VerificationReport r;
  r.check = std::move(name);
  r.triple = fx.triple;
  if (fx.fault != Fault::None) r.detail("fault", to_string(fx.fault));
  return r;
}

std::string str(const Rational& q) { return rational_to_string(q); }

Poly drop_last_term(const Poly& p) {
  std::vector<Term> terms = p.terms();
  if (!terms.empty()) terms.pop_back();
  return Poly::from_terms(std::move(terms));
}

}  // namespace

void VerificationReport::fail(Witness w) {
  status = CheckStatus::Fail;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

void VerificationReport::detail(std::string key, std::string value) {
  for (auto& [k, v] : details) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  details.emplace_back(std::move(key), std::move(value));
}

const std::string* VerificationReport::find_detail(std::string_view key) const {
  for (const auto& [k, v] : details) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string to_string(Fault f) {
  switch (f) {
    case Fault::None: return "none";
    case Fault::DropTerm: return "drop-term";
    case Fault::ZeroR0: return "zero-r0";
    case Fault::ZeroExchange: return "zero-exchange";
    case Fault::ExtraFrozen: return "extra-frozen";
  }
  return "none";
}

std::optional<Fault> parse_fault(std::string_view name) {
  for (Fault f : {Fault::None, Fault::DropTerm, Fault::ZeroR0, Fault::ZeroExchange, Fault::ExtraFrozen}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Fault default_fault(std::string_view check) {
  if (check == "compat" || check == "somega") return Fault::ZeroR0;
  if (check == "rank") return Fault::ZeroExchange;
  if (check == "stable") return Fault::ExtraFrozen;
  return Fault::DropTerm;
}

Fixture make_fixture(const BDTriple& t, Fault fault) {
  Fixture fx{t, initial_seed(t), RPlusOperator::exotic(t), RPlusOperator::standard(t), fault};
  switch (fault) {
    case Fault::None:
      break;
    case Fault::DropTerm: {
      Label l{t.n + 1 - t.alpha, 1};
      auto& f = fx.seed.cluster[fx.seed.exchange.col_index(l)];
      f.value = drop_last_term(f.value);
      break;
    }
    case Fault::ZeroR0: {
      R0Coefficients zero{t.n, QMatrix(t.n - 1, t.n - 1)};
      fx.exotic = RPlusOperator::custom(t.n, t.alpha, t.beta, true, zero);
      fx.standard = RPlusOperator::custom(t.n, t.alpha, t.beta, false, zero);
      break;
    }
    case Fault::ZeroExchange:
      if (!fx.seed.exchange.b.empty()) std::fill(fx.seed.exchange.b[0].begin(), fx.seed.exchange.b[0].end(), 0);
      break;
    case Fault::ExtraFrozen: {
      Quiver q = bd_quiver(t);
      q.set_frozen({2, 2}, true);
      fx.seed = make_seed(initial_cluster(t), q);
      break;
    }
  }
  return fx;
}

VerificationReport check_log_canonical(const Fixture& fx) {
  Stopwatch sw;
  VerificationReport r = new_report("logcanon", fx);
  OmegaSweep s = sweep_omega(fx.seed.cluster, fx.exotic);
  r.detail("pairs", std::to_string(s.pairs));
  r.detail("failures", std::to_string(s.failures.size()));
  for (const auto& f : s.failures) {
    r.fail({{f.first, f.second}, "constant", "not a constant multiple", "bracket / (f g)"});
  }
  r.labels = s.labels;
  r.omega = std::move(s.omega);
  r.seconds = sw.seconds();
  return r;
}

VerificationReport check_compatibility(const Fixture& fx, const VerificationReport* logcanon) {
  Stopwatch sw;
  VerificationReport r = new_report("compat", fx);
  VerificationReport own;
  if (logcanon == nullptr || !logcanon->omega) {
    own = check_log_canonical(fx);
    logcanon = &own;
  }
  if (!logcanon->passed()) {
    for (const auto& w : logcanon->witnesses) {
      r.fail({w.labels, "log canonical pair", w.actual, "omega is undefined"});
    }
    r.seconds = sw.seconds();
    return r;
  }
  const ExchangeMatrix& b = fx.seed.exchange;
  const QMatrix& omega = *logcanon->omega;
  const int rows = b.num_mutable();
  const int cols = static_cast<int>(b.cols.size());
  // Raw B~ * Omega. Summing over incoming minus outgoing arrows gives its negative.
  QMatrix raw(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      Rational acc = 0;
      for (int k = 0; k < cols; ++k) {
        if (b.b[i][k] != 0) acc += b.b[i][k] * omega.at(k, j);
      }
      raw.at(i, j) = acc;
    }
  }
  bool strict = true;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      Rational p = -raw.at(i, j);
      Label row = b.rows[i], col = b.cols[j];
      if (i == j) {
        if (p <= 0) r.fail({{row, col}, "positive diagonal", str(p), ""});
        if (p != 1) strict = false;
      } else if (p != 0) {
        r.fail({{row, col}, "0", str(p), j < rows ? "mutable block" : "frozen block"});
      }
    }
  }
  r.detail("orientation", "incoming minus outgoing (-B~ Omega)");
  if (r.passed()) r.detail("normalization", strict ? "strict" : "scaled");
  r.labels = b.cols;
  r.product = raw;
  r.seconds = sw.seconds();
  return r;
}

VerificationReport check_rank(const Fixture& fx) {
  Stopwatch sw;
  VerificationReport r = new_report("rank", fx);
  const ExchangeMatrix& b = fx.seed.exchange;
  const int n = fx.triple.n;
  int rk = rank(b);
  int mutable_count = b.num_mutable();
  int expected = n * n - 1 - (2 * n - 4);
  r.detail("rank", std::to_string(rk));
  r.detail("mutable", std::to_string(mutable_count));
  if (rk != mutable_count) r.fail({{}, std::to_string(mutable_count), std::to_string(rk), "rank"});
  if (mutable_count != expected) r.fail({{}, std::to_string(expected), std::to_string(mutable_count), "mutable count"});
  r.seconds = sw.seconds();
  return r;
}

namespace {

// phi' at (1, beta+1): row (x_{n,alpha}, x_{n,alpha+1}, 0, ...) over columns
// beta..n on top of rows 2..n-beta+1 of X.
Poly case4_top(const BDTriple& t) {
  const int n = t.n, k = n - t.beta + 1;
  PolyMatrix a(k, k);
  a.at(0, 0) = Poly::var(xvar(n, t.alpha));
  a.at(0, 1) = Poly::var(xvar(n, t.alpha + 1));
  for (int r = 1; r < k; ++r) {
    for (int c = 0; c < k; ++c) a.at(r, c) = Poly::var(xvar(r + 1, t.beta + c));
  }
  return determinant(a);
}

// phi' at (alpha+1, 1): column (x_{beta,n}, x_{beta+1,n}, 0, ...) over rows
// alpha..n beside columns 2..n-alpha+1 of X.
Poly case4_left(const BDTriple& t) {
  const int n = t.n, k = n - t.alpha + 1;
  PolyMatrix a(k, k);
  a.at(0, 0) = Poly::var(xvar(t.beta, n));
  a.at(1, 0) = Poly::var(xvar(t.beta + 1, n));
  for (int c = 1; c < k; ++c) {
    for (int r = 0; r < k; ++r) a.at(r, c) = Poly::var(xvar(t.alpha + r, c + 1));
  }
  return determinant(a);
}

}  // namespace

VerificationReport check_regularity(const Fixture& fx) {
  Stopwatch sw;
  VerificationReport r = new_report("regular", fx);
  const BDTriple& t = fx.triple;
  const auto& labels = fx.seed.exchange.rows;
  std::vector<std::optional<Poly>> exchanged(labels.size());
  parallel_for(labels.size(), [&](std::size_t i) {
    try {
      exchanged[i] = mutate_seed(fx.seed, labels[i]).exchanged;
    } catch (const NotLaurentPolynomial&) {
      exchanged[i].reset();
    }
  });
  std::size_t polynomial = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (exchanged[i]) {
      ++polynomial;
      r.detail("terms" + labels[i].to_string(), std::to_string(exchanged[i]->size()));
    } else {
      r.fail({{labels[i]}, "polynomial", "not divisible", "exchange relation"});
    }
  }
  r.detail("mutable", std::to_string(labels.size()));
  r.detail("polynomial", std::to_string(polynomial));

  auto identity = [&](Label l, const Poly& expected, const std::string& name) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) return;
    const auto& got = exchanged[it - labels.begin()];
    if (!got) return;
    bool ok = *got == expected;
    r.detail("identity" + l.to_string(), ok ? "holds" : "fails");
    if (!ok) r.fail({{l}, expected.to_string(), got->to_string(), name});
  };
  const int n = t.n;
  if (t.alpha > 1) {
    identity({n, t.alpha}, arrow(n, minor_rect(n, n - 1, t.alpha - 1), Arrow::Right), "f^->_{n-1,alpha-1}");
  }
  if (2 * t.beta != n + 1) identity({1, t.beta + 1}, case4_top(t), "Desnanot-Jacobi at (1,beta+1)");
  if (2 * t.alpha != n + 1) identity({t.alpha + 1, 1}, case4_left(t), "Desnanot-Jacobi at (alpha+1,1)");
  r.seconds = sw.seconds();
  return r;
}

VerificationReport check_frozen_log_canonical(const Fixture& fx) {
  Stopwatch sw;
  VerificationReport r = new_report("frozen", fx);
  const int n = fx.triple.n;
  std::vector<const ClusterFunction*> frozen;
  for (const auto& f : fx.seed.cluster) {
    if (f.frozen) frozen.push_back(&f);
  }
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<std::optional<Rational>> coeff(frozen.size() * cells);
  parallel_for(coeff.size(), [&](std::size_t idx) {
    const ClusterFunction& f = *frozen[idx / cells];
    int cell = static_cast<int>(idx % cells);
    coeff[idx] = poisson_coefficient(f.value, Poly::var(xvar(cell / n + 1, cell % n + 1)), fx.exotic);
  });
  for (std::size_t idx = 0; idx < coeff.size(); ++idx) {
    if (coeff[idx]) continue;
    int cell = static_cast<int>(idx % cells);
    Label coord{cell / n + 1, cell % n + 1};
    r.fail({{frozen[idx / cells]->label, coord}, "constant", "not a constant multiple",
            "second label is the coordinate x" + coord.to_string()});
  }
  r.detail("frozen", std::to_string(frozen.size()));
  r.detail("pairs", std::to_string(coeff.size()));
  r.seconds = sw.seconds();
  return r;
}

VerificationReport check_stable_count(const Fixture& fx) {
  Stopwatch sw;
  VerificationReport r = new_report("stable", fx);
  int count = 0;
  for (const auto& f : fx.seed.cluster) {
    if (f.frozen && !(f.label == Label{1, 1})) ++count;
  }
  const int expected = 2 * (fx.triple.n - 2);
  r.detail("stable", std::to_string(count));
  if (count != expected) r.fail({{}, std::to_string(expected), std::to_string(count), "frozen count in SL mode"});
  r.seconds = sw.seconds();
  return r;
}

Rational expected_s_omega_first(const BDTriple& t, Label g) {
  if (g.col <= t.alpha && g.row == t.n + g.col - t.alpha) return 1;
  if (g.col == t.beta + 1) return -1;
  return 0;
}

Rational expected_s_omega_second(const BDTriple& t, Label g) {
  if (g.row <= t.beta && g.col == t.n + g.row - t.beta) return 1;
  if (g.row == t.alpha + 1) return -1;
  return 0;
}

SOmegaTable compute_s_omega(const Fixture& fx) {
  const BDTriple& t = fx.triple;
  const int n = t.n, a = t.alpha, b = t.beta;
  std::vector<ClusterFunction> std_cluster = standard_cluster(n, GroupMode::GL);
  const std::vector<Label> probes{{n, a}, {n, a + 1}, {n, b}, {n, b + 1}, {a, n}, {a + 1, n}, {b, n}, {b + 1, n}};
  const std::size_t count = std_cluster.size();
  std::vector<Rational> omega(probes.size() * count);
  std::vector<char> ok(omega.size(), 1);
  parallel_for(omega.size(), [&](std::size_t idx) {
    const Poly& f = find_function(std_cluster, probes[idx / count]).value;
    auto w = poisson_coefficient(f, std_cluster[idx % count].value, fx.standard);
    if (w) {
      omega[idx] = *w;
    } else {
      ok[idx] = 0;
    }
  });
  for (std::size_t idx = 0; idx < ok.size(); ++idx) {
    if (!ok[idx]) throw NotLogCanonical(probes[idx / count], std_cluster[idx % count].label);
  }
  SOmegaTable out;
  auto w = [&](int probe, std::size_t g) { return omega[probe * count + g]; };
  for (std::size_t g = 0; g < count; ++g) {
    out.labels.push_back(std_cluster[g].label);
    out.first.push_back(w(0, g) - w(1, g) - w(2, g) + w(3, g));
    out.second.push_back(w(4, g) - w(5, g) - w(6, g) + w(7, g));
  }
  return out;
}

VerificationReport check_s_omega(const Fixture& fx) {
  Stopwatch sw;
  VerificationReport r = new_report("somega", fx);
  SOmegaTable table;
  try {
    table = compute_s_omega(fx);
  } catch (const NotLogCanonical& e) {
    r.fail({{e.first, e.second}, "log canonical pair", "not a constant multiple", "standard cluster"});
    r.seconds = sw.seconds();
    return r;
  }
  std::size_t first_bad = 0, second_bad = 0;
  for (std::size_t g = 0; g < table.labels.size(); ++g) {
    Label l = table.labels[g];
    Rational e1 = expected_s_omega_first(fx.triple, l), e2 = expected_s_omega_second(fx.triple, l);
    if (table.first[g] != e1) {
      ++first_bad;
      r.fail({{l}, str(e1), str(table.first[g]), "first sum"});
    }
    if (table.second[g] != e2) {
      ++second_bad;
      r.fail({{l}, str(e2), str(table.second[g]), "second sum"});
    }
  }
  r.detail("first", first_bad == 0 ? "matches" : std::to_string(first_bad) + " mismatches");
  r.detail("second", second_bad == 0 ? "matches" : std::to_string(second_bad) + " mismatches");
  r.seconds = sw.seconds();
  return r;
}

std::vector<VerificationReport> check_all(const Fixture& fx) {
  std::vector<VerificationReport> out;
  out.push_back(check_log_canonical(fx));
  out.push_back(check_compatibility(fx, &out.front()));
  out.push_back(check_rank(fx));
  out.push_back(check_regularity(fx));
  out.push_back(check_frozen_log_canonical(fx));
  out.push_back(check_stable_count(fx));
  return out;
}

VerificationReport run_check(std::string_view name, const Fixture& fx) {
  if (name == "logcanon") return check_log_canonical(fx);
  if (name == "compat") return check_compatibility(fx);
  if (name == "rank") return check_rank(fx);
  if (name == "regular") return check_regularity(fx);
  if (name == "frozen") return check_frozen_log_canonical(fx);
  if (name == "stable") return check_stable_count(fx);
  if (name == "somega") return check_s_omega(fx);
  throw std::invalid_argument("unknown check " + std::string(name));
}

VerificationReport check_cybe(const BDTriple& t, bool standard, bool zero_r0) {
  Stopwatch sw;
  VerificationReport r;
  r.check = "cybe";
  r.triple = t;
  RPlusOperator op = standard ? RPlusOperator::standard(t) : RPlusOperator::exotic(t);
  if (zero_r0) {
    op = RPlusOperator::custom(t.n, t.alpha, t.beta, !standard, R0Coefficients{t.n, QMatrix(t.n - 1, t.n - 1)});
    r.detail("fault", "zero-r0");
  }
  r.detail("operator", standard ? "standard" : "exotic");
  RTensor tensor = build_r_tensor(op);
  CybeReport c = verify_cybe(tensor);
  r.detail("nonzero", std::to_string(c.nonzero_entries));
  if (!c.satisfied) {
    std::string idx;
    for (int v : c.witness) idx += (idx.empty() ? "" : ",") + std::to_string(v);
    r.fail({{}, "0", str(c.witness_value), "[[r,r]] entry (" + idx + ")"});
  }
  RTensor sym = tensor + tensor.flipped();
  RTensor casimir = sl_casimir(t.n);
  bool casimir_ok = sym == casimir;
  r.detail("casimir", casimir_ok ? "holds" : "fails");
  if (!casimir_ok) r.fail({{}, "sl_n Casimir", "r + r21 differs", "symmetric part"});
  r.seconds = sw.seconds();
  return r;
}

VerificationReport check_r_plus(const BDTriple& t, bool standard) {
  Stopwatch sw;
  VerificationReport r;
  r.check = "rplus";
  r.triple = t;
  RPlusOperator op = standard ? RPlusOperator::standard(t) : RPlusOperator::exotic(t);
  r.detail("operator", standard ? "standard" : "exotic");
  RTensor tensor = build_r_tensor(op);
  const int n = t.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      QMatrix e(n, n);
      e.at(i, j) = 1;
      QMatrix got = op.apply(e), want = r_plus_oracle(tensor, e);
      if (got != want) r.fail({{Label{i + 1, j + 1}}, want.to_string(), got.to_string(), "matrix unit"});
    }
  }
  QMatrix id = QMatrix::identity(n);
  if (!op.apply(id).is_zero()) r.fail({{}, "0", op.apply(id).to_string(), "R+(Id)"});
  r.seconds = sw.seconds();
  return r;
}

}  // namespace bdc
