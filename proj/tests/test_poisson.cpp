#include <gtest/gtest.h>

#include "bdcluster/poisson.hpp"
#include "test_support.hpp"

using namespace bdc;
using namespace bdc::testing;

namespace {

Poly x(int i, int j) { return Poly::var(xvar(i, j)); }

std::vector<BDTriple> triples(int max_n) {
  std::vector<BDTriple> out;
  for (int n = 3; n <= max_n; ++n) {
    for (int a = 1; a <= n - 2; ++a) {
      for (int b = a + 1; b <= n - 1; ++b) out.push_back(make_triple(n, a, b));
    }
  }
  return out;
}

std::string name(const BDTriple& t) {
  return std::to_string(t.n) + ":" + std::to_string(t.alpha) + "->" + std::to_string(t.beta);
}

QMatrix unit(int n, int i, int j) {
  QMatrix e(n, n);
  e.at(i - 1, j - 1) = 1;
  return e;
}

// Cartan pairing of simple roots i, j of A_{n-1}, one-based.
int cartan(int i, int j) {
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

// Bracket of coordinate functions computed directly from the R_+ matrix:
// grad x_{ij} = e_{ji}, so grad(x_ij) X = e_j (row i of X) and X grad(x_ij) = (column j of X) e_i.
Poly oracle_coordinate_bracket(int n, Label a, Label b, const RPlusOperator& op) {
  auto right = [&](Label l) {
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int c = 1; c <= n; ++c) m[l.col - 1][c - 1] = x(l.row, c);
    return m;
  };
  auto left = [&](Label l) {
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int r = 1; r <= n; ++r) m[r - 1][l.row - 1] = x(r, l.col);
    return m;
  };
  auto apply = [&](const std::vector<std::vector<Poly>>& eta) {
    std::vector<std::vector<Poly>> out(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (eta[i][j].is_zero()) continue;
        QMatrix r = op.apply(unit(n, i + 1, j + 1));
        for (int p = 0; p < n; ++p) {
          for (int q = 0; q < n; ++q) {
            if (r.at(p, q) != 0) out[p][q] += r.at(p, q) * eta[i][j];
          }
        }
      }
    }
    return out;
  };
  auto pair = [&](const std::vector<std::vector<Poly>>& u, const std::vector<std::vector<Poly>>& v) {
    Poly acc;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) acc += u[i][j] * v[j][i];
    }
    return acc;
  };
  return pair(apply(right(a)), right(b)) - pair(apply(left(a)), left(b));
}

}  // namespace

TEST(R0, StandardThree) {
  R0Coefficients c = build_r0_standard(3);
  EXPECT_EQ(c.c.at(0, 0), 1);
  EXPECT_EQ(c.c.at(0, 1), 0);
  EXPECT_EQ(c.c.at(1, 0), -1);
  EXPECT_EQ(c.c.at(1, 1), 1);
}

TEST(R0, CorrectionForFiveOneThree) {
  BDTriple t = make_triple(5, 1, 3);
  QMatrix diff = build_r0(t).c - build_r0_standard(5).c;
  // B is supported on (alpha,beta), (beta-1,alpha), (beta,alpha+1), (beta,alpha), (alpha,beta-1), (alpha+1,beta).
  EXPECT_EQ(diff.at(0, 2), 1);
  EXPECT_EQ(diff.at(1, 0), 1);
  EXPECT_EQ(diff.at(2, 1), 1);
  EXPECT_EQ(diff.at(2, 0), -1);
  EXPECT_EQ(diff.at(0, 1), -1);
  EXPECT_EQ(diff.at(1, 2), -1);
  EXPECT_EQ(diff.at(3, 3), 0);
}

TEST(R0, AdjacentRootsUseA) {
  BDTriple t = make_triple(5, 2, 3);
  EXPECT_EQ(build_r0(t).c, build_r0_standard(5).c);
}

TEST(R0, AdjacentCartanPairing) {
  R0Coefficients c = build_r0_standard(3);
  EXPECT_EQ(c.c.at(0, 1) + c.c.at(1, 0), -1);
}

TEST(R0, ConditionsHoldForAllTriples) {
  for (const auto& t : triples(6)) {
    R0Coefficients r = build_r0(t);
    const int m = t.n - 1;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        EXPECT_EQ(r.c.at(i - 1, j - 1) + r.c.at(j - 1, i - 1), cartan(i, j)) << name(t);
        EXPECT_EQ(r.c.at(t.beta - 1, j - 1) + r.c.at(j - 1, t.alpha - 1), 0) << name(t) << " j=" << j;
      }
    }
  }
}

TEST(DualBasis, PairsWithSimpleCoroots) {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        Rational pairing = hhat_entry(n, i, j) - hhat_entry(n, i, j + 1);
        EXPECT_EQ(pairing, i == j ? 1 : 0);
      }
      Rational trace = 0;
      for (int k = 1; k <= n; ++k) trace += hhat_entry(n, i, k);
      EXPECT_EQ(trace, 0);
    }
  }
  EXPECT_EQ(hhat_entry(3, 1, 1), Rational(2, 3));
  EXPECT_EQ(hhat_entry(3, 1, 2), Rational(-1, 3));
}

TEST(RPlus, AnnihilatesIdentity) {
  for (const auto& t : triples(5)) {
    EXPECT_TRUE(RPlusOperator::exotic(t).apply(QMatrix::identity(t.n)).is_zero()) << name(t);
    EXPECT_TRUE(RPlusOperator::standard(t).apply(QMatrix::identity(t.n)).is_zero()) << name(t);
  }
}

TEST(RPlus, BdCorrection) {
  for (const auto& t : triples(5)) {
    const int n = t.n, a = t.alpha, b = t.beta;
    RPlusOperator op = RPlusOperator::exotic(t);
    EXPECT_EQ(op.apply(unit(n, a, a + 1)), unit(n, a, a + 1) + unit(n, b, b + 1));
    QMatrix minus = QMatrix(n, n) - unit(n, a + 1, a);
    EXPECT_EQ(op.apply(unit(n, b + 1, b)), minus);
  }
}

TEST(RPlus, TriangularStructure) {
  for (const auto& t : triples(5)) {
    const int n = t.n;
    RPlusOperator op = RPlusOperator::exotic(t), plain = RPlusOperator::standard(t);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i < j) EXPECT_EQ(plain.apply(unit(n, i, j)), unit(n, i, j));
        if (i > j) {
          EXPECT_TRUE(plain.apply(unit(n, i, j)).is_zero());
          if (!(i == t.beta + 1 && j == t.beta)) EXPECT_TRUE(op.apply(unit(n, i, j)).is_zero());
        }
      }
    }
  }
}

TEST(RPlus, DiagonalClosedFormMatchesCoefficients) {
  for (const auto& t : triples(5)) {
    RPlusOperator op = RPlusOperator::exotic(t);
    for (int k = 1; k <= t.n; ++k) {
      std::vector<Rational> closed = r_diag_closed_form(t, k);
      for (int l = 1; l <= t.n; ++l) EXPECT_EQ(op.diag_action().at(k - 1, l - 1), closed[l - 1]) << name(t);
    }
  }
}

TEST(RPlus, MatchesTensorOracleOnMatrixUnits) {
  for (const auto& t : triples(5)) {
    for (bool standard : {false, true}) {
      RPlusOperator op = standard ? RPlusOperator::standard(t) : RPlusOperator::exotic(t);
      RTensor r = build_r_tensor(op);
      for (int i = 1; i <= t.n; ++i) {
        for (int j = 1; j <= t.n; ++j) {
          QMatrix e = unit(t.n, i, j);
          EXPECT_EQ(op.apply(e), r_plus_oracle(r, e)) << name(t) << (standard ? " std " : " exotic ") << i << j;
        }
      }
    }
  }
}

TEST(RPlus, MatchesTensorOracleOnRandomArguments) {
  RPlusOperator op = RPlusOperator::exotic(make_triple(4, 1, 3));
  RTensor r = build_r_tensor(op);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix eta(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) eta.at(i, j) = random_rational();
    }
    EXPECT_EQ(op.apply(eta), r_plus_oracle(r, eta));
  }
  EXPECT_TRUE(r_plus_oracle(r, QMatrix::identity(4)).is_zero());
}

TEST(RPlus, MatrixFormAgreesWithApply) {
  RPlusOperator op = RPlusOperator::exotic(make_triple(4, 1, 2));
  QMatrix m = op.matrix();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      QMatrix out = op.apply(unit(4, i + 1, j + 1));
      for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) EXPECT_EQ(m.at(p * 4 + q, i * 4 + j), out.at(p, q));
      }
    }
  }
}

TEST(RTensor, StandardTwo) {
  RTensor r = build_r_tensor(RPlusOperator::standard(2));
  // hhat (x) hhat with hhat = diag(1/2, -1/2), plus e21 (x) e12.
  EXPECT_EQ(r.at(0, 0, 0, 0), Rational(1, 4));
  EXPECT_EQ(r.at(0, 0, 1, 1), Rational(-1, 4));
  EXPECT_EQ(r.at(1, 1, 1, 1), Rational(1, 4));
  EXPECT_EQ(r.at(1, 0, 0, 1), 1);
  EXPECT_EQ(r.at(0, 1, 1, 0), 0);
  int nonzero = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) nonzero += r.at(a, b, c, d) != 0;
  EXPECT_EQ(nonzero, 5);
}

TEST(RTensor, SymmetricPartIsCasimir) {
  for (const auto& t : triples(5)) {
    for (bool standard : {false, true}) {
      RTensor r = build_r_tensor(t, standard);
      EXPECT_EQ(r + r.flipped(), sl_casimir(t.n)) << name(t);
    }
  }
  RTensor r2 = build_r_tensor(RPlusOperator::standard(2));
  EXPECT_EQ(r2 + r2.flipped(), sl_casimir(2));
}

TEST(Cybe, StandardTwo) { EXPECT_TRUE(verify_cybe(build_r_tensor(RPlusOperator::standard(2))).satisfied); }

TEST(Cybe, ExoticAndStandardUpToFour) {
  for (const auto& t : triples(4)) {
    EXPECT_TRUE(verify_cybe(build_r_tensor(t, false)).satisfied) << name(t);
    EXPECT_TRUE(verify_cybe(build_r_tensor(t, true)).satisfied) << name(t);
  }
}

TEST(Cybe, ZeroR0Fails) {
  BDTriple t = make_triple(3, 1, 2);
  RPlusOperator op = RPlusOperator::custom(3, 1, 2, true, R0Coefficients{3, QMatrix(2, 2)});
  CybeReport rep = verify_cybe(build_r_tensor(op));
  EXPECT_FALSE(rep.satisfied);
  EXPECT_EQ(rep.witness.size(), 6u);
  EXPECT_NE(rep.witness_value, 0);
}

TEST(Cybe, TransposedCoefficientsFail) {
  // c^T satisfies the symmetric condition but breaks the one tied to the triple.
  BDTriple t = make_triple(4, 1, 3);
  R0Coefficients c = build_r0(t);
  RPlusOperator op = RPlusOperator::custom(4, 1, 3, true, R0Coefficients{4, c.c.transposed()});
  EXPECT_FALSE(verify_cybe(build_r_tensor(op)).satisfied);
}

TEST(Bracket, CoordinateFunctionsMatchDirectOracle) {
  for (const auto& t : triples(4)) {
    RPlusOperator op = RPlusOperator::exotic(t);
    for (int trial = 0; trial < 20; ++trial) {
      Label a{uniform(1, t.n), uniform(1, t.n)}, b{uniform(1, t.n), uniform(1, t.n)};
      EXPECT_EQ(sklyanin_bracket(x(a.row, a.col), x(b.row, b.col), op), oracle_coordinate_bracket(t.n, a, b, op));
    }
  }
}

TEST(Bracket, SelfBracketVanishes) {
  RPlusOperator op = RPlusOperator::exotic(make_triple(3, 1, 2));
  for (int trial = 0; trial < 20; ++trial) {
    Poly f = random_poly(3);
    EXPECT_TRUE(sklyanin_bracket(f, f, op).is_zero());
  }
}

TEST(Bracket, AntisymmetricAndBilinear) {
  RPlusOperator op = RPlusOperator::exotic(make_triple(4, 1, 3));
  for (int trial = 0; trial < 30; ++trial) {
    Poly f = random_poly(4), g = random_poly(4), h = random_poly(4);
    Rational s = random_rational();
    EXPECT_EQ(sklyanin_bracket(f, g, op), -sklyanin_bracket(g, f, op));
    EXPECT_EQ(sklyanin_bracket(f + s * h, g, op), sklyanin_bracket(f, g, op) + s * sklyanin_bracket(h, g, op));
  }
}

TEST(Bracket, Leibniz) {
  auto cl = standard_cluster(4);
  RPlusOperator op = RPlusOperator::exotic(make_triple(4, 1, 2));
  for (int trial = 0; trial < 30; ++trial) {
    const Poly& f1 = cl[uniform(0, 15)].value;
    const Poly& f2 = cl[uniform(0, 15)].value;
    const Poly& f3 = cl[uniform(0, 15)].value;
    EXPECT_EQ(sklyanin_bracket(f1 * f2, f3, op), f1 * sklyanin_bracket(f2, f3, op) + sklyanin_bracket(f1, f3, op) * f2);
  }
}

TEST(Bracket, JacobiOnCoordinateTriples) {
  for (const auto& t : triples(4)) {
    for (bool standard : {false, true}) {
      RPlusOperator op = standard ? RPlusOperator::standard(t) : RPlusOperator::exotic(t);
      for (int trial = 0; trial < 15; ++trial) {
        Poly a = x(uniform(1, t.n), uniform(1, t.n));
        Poly b = x(uniform(1, t.n), uniform(1, t.n));
        Poly c = x(uniform(1, t.n), uniform(1, t.n));
        Poly j = sklyanin_bracket(a, sklyanin_bracket(b, c, op), op) + sklyanin_bracket(b, sklyanin_bracket(c, a, op), op) +
                 sklyanin_bracket(c, sklyanin_bracket(a, b, op), op);
        EXPECT_TRUE(j.is_zero()) << name(t);
      }
    }
  }
}

TEST(Bracket, ZeroR0BreaksJacobi) {
  RPlusOperator op = RPlusOperator::custom(3, 1, 2, true, R0Coefficients{3, QMatrix(2, 2)});
  bool broken = false;
  for (int i = 1; i <= 3 && !broken; ++i)
    for (int j = 1; j <= 3 && !broken; ++j)
      for (int k = 1; k <= 3 && !broken; ++k) {
        Poly a = x(i, j), b = x(j, k), c = x(k, i);
        Poly s = sklyanin_bracket(a, sklyanin_bracket(b, c, op), op) + sklyanin_bracket(b, sklyanin_bracket(c, a, op), op) +
                 sklyanin_bracket(c, sklyanin_bracket(a, b, op), op);
        broken = !s.is_zero();
      }
  EXPECT_TRUE(broken);
}

TEST(Bracket, DifferenceFormulaOnAllCoordinatePairs) {
  const int n = 3;
  for (const auto& t : triples(n)) {
    RPlusOperator exotic = RPlusOperator::exotic(t), plain = RPlusOperator::standard(t);
    const int a = t.alpha, b = t.beta;
    for (int p = 1; p <= n * n; ++p) {
      for (int q = 1; q <= n * n; ++q) {
        Poly f = x((p - 1) / n + 1, (p - 1) % n + 1), g = x((q - 1) / n + 1, (q - 1) % n + 1);
        Poly diff = sklyanin_bracket(f, g, exotic) - sklyanin_bracket(f, g, plain);
        Poly formula = col_replace(f, n, a, a + 1) * col_replace(g, n, b + 1, b) -
                       col_replace(f, n, b + 1, b) * col_replace(g, n, a, a + 1) +
                       row_replace(f, n, b, b + 1) * row_replace(g, n, a + 1, a) -
                       row_replace(f, n, a + 1, a) * row_replace(g, n, b, b + 1);
        EXPECT_EQ(diff, formula) << f << " , " << g;
      }
    }
  }
}

TEST(Bracket, DifferenceFormulaOnRandomMinors) {
  for (const auto& t : triples(4)) {
    RPlusOperator exotic = RPlusOperator::exotic(t), plain = RPlusOperator::standard(t);
    auto cl = standard_cluster(t.n);
    const int n = t.n, a = t.alpha, b = t.beta;
    for (int trial = 0; trial < 10; ++trial) {
      const Poly& f = cl[uniform(0, n * n - 1)].value;
      const Poly& g = cl[uniform(0, n * n - 1)].value;
      Poly diff = sklyanin_bracket(f, g, exotic) - sklyanin_bracket(f, g, plain);
      Poly formula = col_replace(f, n, a, a + 1) * col_replace(g, n, b + 1, b) -
                     col_replace(f, n, b + 1, b) * col_replace(g, n, a, a + 1) +
                     row_replace(f, n, b, b + 1) * row_replace(g, n, a + 1, a) -
                     row_replace(f, n, a + 1, a) * row_replace(g, n, b, b + 1);
      EXPECT_EQ(diff, formula) << name(t);
    }
  }
}

TEST(Bracket, SharedFunctionsHaveEqualBrackets) {
  for (const auto& t : triples(4)) {
    RPlusOperator exotic = RPlusOperator::exotic(t), plain = RPlusOperator::standard(t);
    std::vector<ClusterFunction> shared;
    for (const auto& f : initial_cluster(t)) {
      if (f.kind == FunctionKind::Standard) shared.push_back(f);
    }
    for (std::size_t i = 0; i < shared.size(); ++i) {
      for (std::size_t j = i + 1; j < shared.size(); ++j) {
        EXPECT_EQ(sklyanin_bracket(shared[i].value, shared[j].value, exotic),
                  sklyanin_bracket(shared[i].value, shared[j].value, plain))
            << name(t) << shared[i].label.to_string() << shared[j].label.to_string();
      }
    }
  }
}

TEST(Coefficient, SelfPairIsZero) {
  RPlusOperator op = RPlusOperator::exotic(make_triple(3, 1, 2));
  EXPECT_EQ(poisson_coefficient(x(1, 2), x(1, 2), op), Rational(0));
}

TEST(Coefficient, DetectsNonConstantRatio) {
  RPlusOperator op = RPlusOperator::standard(3);
  EXPECT_FALSE(poisson_coefficient(x(1, 1), x(2, 2), op));
  EXPECT_THROW(poisson_coefficient(Poly(), x(2, 1), op), DivisionByZero);
}

TEST(Coefficient, ThetaRowDecomposes) {
  for (const auto& t : triples(5)) {
    RPlusOperator exotic = RPlusOperator::exotic(t), plain = RPlusOperator::standard(t);
    auto cl = initial_cluster(t);
    auto std_cl = standard_cluster(t.n);
    const Poly& head = find_function(cl, {1, t.beta + 1}).value;
    for (int k = 1; k <= t.alpha; ++k) {
      const Poly& theta_k = find_function(cl, {t.n + k - t.alpha, k}).value;
      const Poly& q = find_function(std_cl, {t.n + k - t.alpha, k}).value;
      for (int m = 2; m <= t.n; ++m) {
        Label gl{m, t.beta + 1};
        if (is_first_family(t, gl) || is_second_family(t, gl)) continue;
        const Poly& g = find_function(std_cl, gl).value;
        auto lhs = poisson_coefficient(theta_k, g, exotic);
        auto w1 = poisson_coefficient(head, g, exotic), w2 = poisson_coefficient(q, g, plain);
        ASSERT_TRUE(lhs && w1 && w2) << name(t);
        EXPECT_EQ(*lhs, *w1 + *w2) << name(t) << " k=" << k << " m=" << m;
      }
    }
  }
}

TEST(Omega, StandardTwoIsSkew) {
  OmegaMatrix m = omega_matrix(standard_cluster(2), RPlusOperator::standard(2));
  ASSERT_EQ(m.omega.rows(), 4);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(m.omega.at(i, i), 0);
    for (int j = 0; j < 4; ++j) EXPECT_EQ(m.omega.at(i, j), -m.omega.at(j, i));
  }
}

TEST(Omega, ExoticSmallestAllPairs) {
  BDTriple t = make_triple(3, 1, 2);
  OmegaSweep s = sweep_omega(initial_cluster(t), RPlusOperator::exotic(t));
  EXPECT_EQ(s.pairs, 36u);
  EXPECT_TRUE(s.failures.empty());
}

TEST(Omega, ThrowsOnFirstFailure) {
  BDTriple t = make_triple(3, 1, 2);
  auto cl = initial_cluster(t);
  for (auto& f : cl) {
    if (f.label == Label{3, 1}) f.value = x(3, 1) * x(1, 3);
  }
  EXPECT_THROW(omega_matrix(cl, RPlusOperator::exotic(t)), NotLogCanonical);
}

TEST(Bracket, RejectsSecondCopy) {
  EXPECT_THROW(prepare_bracket(Poly::var(yvar(1, 1)), 3), std::invalid_argument);
}
