#include <gtest/gtest.h>

#include <random>

#include "trialg/catalog/finite_families.hpp"
#include "trialg/trisys/axioms.hpp"
#include "trialg/trisys/intertwiner.hpp"
#include "trialg/trisys/simplicity.hpp"

using namespace trialg;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

TriAlgebra mutate(TriAlgebra t, std::size_t i, std::size_t j, std::size_t k, std::size_t comp) {
  Vector v = t.at(i, j, k).to_dense(t.dim());
  v[comp] += 1;
  t.set(i, j, k, v);
  return t;
}

Matrix random_invertible(std::mt19937& g, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(g);
    if (!m.determinant().is_zero()) return m;
  }
}

}  // namespace

TEST(TriAlgebra, BracketExamples) {
  const TriAlgebra o = o3();
  EXPECT_EQ(o.bracket(e(4, 0), e(4, 1), e(4, 2)), e(4, 3));
  EXPECT_TRUE(is_zero(o.bracket(Vector(4), e(4, 1), e(4, 2))));
  const TriAlgebra a = a3_t(1, 2);
  EXPECT_EQ(a.bracket(e(2, 0), e(2, 0), e(2, 1)), e(2, 1));
}

TEST(TriAlgebra, LeftOpO3) {
  const Matrix l = o3().left_op(0, 1);
  Matrix want(4, 4);
  want(3, 2) = 1;   // e3 -> e4
  want(2, 3) = -1;  // e4 -> -e3
  EXPECT_EQ(l, want);
  EXPECT_TRUE(TriAlgebra("zero", 3).left_op(0, 1).is_zero());
}

TEST(TriAlgebra, LeftOpBilinear) {
  std::mt19937 g(31);
  std::uniform_int_distribution<int> d(-3, 3);
  const TriAlgebra t = a3_t(2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x(4), x2(4), y(4);
    for (std::size_t i = 0; i < 4; ++i) {
      x[i] = d(g);
      x2[i] = d(g);
      y[i] = d(g);
    }
    EXPECT_EQ(left_op(t, x + x2, y), left_op(t, x, y) + left_op(t, x2, y));
    EXPECT_EQ(left_op(t, Rational(3) * x, y), Rational(3) * left_op(t, x, y));
  }
}

TEST(Axioms, N6Examples) {
  const auto r = check_n6(a3_t(2, 2));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.tuples_per_axiom.at("N6(b) fundamental identity"), 1024u);
  EXPECT_TRUE(check_n6(TriAlgebra("zero", 3)).passed());

  TriAlgebra one("x", 1);
  one.set(0, 0, 0, SparseVec::unit(0));
  const auto bad = check_n6(one);
  EXPECT_FALSE(bad.passed());
  ASSERT_FALSE(bad.violations.empty());
  EXPECT_EQ(bad.violations[0].axiom.substr(0, 5), "N6(a)");
}

TEST(Axioms, N8Examples) {
  EXPECT_TRUE(check_n8(o3()).passed());
  EXPECT_TRUE(check_n8(a3_st(1, 1)).passed());
  const auto r = check_n8(a3_t(2, 2));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.violations.empty());
}

TEST(Axioms, N5Examples) {
  EXPECT_TRUE(check_n5(TriAlgebra("zero", 2)).passed());
  const auto r = check_n5(o3());
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.violations.at(0).axiom.substr(0, 5), "N5(a)");
}

TEST(Axioms, MutationIsCaught) {
  const TriAlgebra t = mutate(c3(1), 0, 1, 0, 1);
  const auto r = check_n6(t);
  EXPECT_FALSE(r.passed());
  EXPECT_LE(r.violations.size(), 5u);
  EXPECT_GE(r.violation_count, r.violations.size());
}

TEST(Axioms, N8ImpliesN6) {
  for (const auto& t : {o3(), a3_st(1, 1), a3_t(2, 2), c3(1), TriAlgebra("zero", 2)})
    if (check_n8(t).passed()) EXPECT_TRUE(check_n6(t).passed()) << t.name();
}

TEST(Axioms, BaseChangeInvariance) {
  std::mt19937 g(32);
  for (const auto& t : {a3_t(1, 2), c3(1), mutate(a3_t(1, 2), 0, 0, 1, 0)}) {
    const bool before = check_n6(t).passed();
    for (int trial = 0; trial < 3; ++trial)
      EXPECT_EQ(check_n6(change_basis(t, random_invertible(g, t.dim()))).passed(), before);
  }
}

TEST(Axioms, ThreadsAndSamplingAgree) {
  const TriAlgebra t = mutate(a3_t(2, 2), 1, 2, 3, 0);
  SweepOptions one, four;
  four.threads = 4;
  const auto a = check_n6(t, one), b = check_n6(t, four);
  EXPECT_EQ(a.violation_count, b.violation_count);
  EXPECT_EQ(a.tuples_checked, b.tuples_checked);
  ASSERT_FALSE(a.violations.empty());
  EXPECT_EQ(a.violations[0].tuple, b.violations[0].tuple);

  SweepOptions s;
  s.sample = 300;
  const auto r = check_n6(a3_t(2, 2), s);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.tuples_checked, 600u);
}

TEST(Axioms, Guardrail) {
  SweepOptions small;
  small.max_dim = 3;
  EXPECT_THROW(check_n6(a3_t(2, 2), small), GuardrailError);
  small.sample = 10;
  EXPECT_NO_THROW(check_n6(a3_t(2, 2), small));
}

TEST(Intertwiner, IdentityAndRandomMap) {
  const TriAlgebra t = a3_t(2, 2);
  EXPECT_TRUE(check_intertwiner(t, t, Matrix::identity(4)).passed());
  Matrix m = Matrix::identity(4);
  m(0, 1) = 1;
  m(2, 3) = 2;
  const auto r = check_intertwiner(t, t, m);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.violations.empty());
  EXPECT_THROW(check_intertwiner(t, t, Matrix(4, 4)), std::invalid_argument);
}

TEST(Intertwiner, FindsSignedPermutation) {
  Matrix p(4, 4);
  p(0, 1) = 1;
  p(1, 0) = 1;
  p(2, 2) = -1;
  p(3, 3) = 1;
  const TriAlgebra t = o3();
  const TriAlgebra moved = change_basis(t, p);
  auto f = find_intertwiner(moved, t);
  ASSERT_TRUE(f);
  EXPECT_TRUE(check_intertwiner(moved, t, *f).passed());
}

TEST(Simplicity, Verdicts) {
  EXPECT_EQ(simplicity(a3_t(1, 1)).verdict, Simplicity::Degenerate);
  const auto s = simplicity(a3_t(2, 2));
  EXPECT_EQ(s.verdict, Simplicity::Simple);
  const TriAlgebra sum = direct_sum(a3_t(2, 2), a3_t(2, 2));
  const auto ns = simplicity(sum);
  ASSERT_EQ(ns.verdict, Simplicity::NotSimple);
  ASSERT_TRUE(ns.witness);
  EXPECT_GT(ns.witness->dim(), 0u);
  EXPECT_LT(ns.witness->dim(), sum.dim());
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < sum.dim(); ++i)
    for (std::size_t j = 0; j < sum.dim(); ++j) ops.push_back(sum.left_op(i, j));
  for (const auto& b : ns.witness->basis())
    for (const auto& op : ops) EXPECT_TRUE(ns.witness->contains(op.apply(b)));
}

TEST(Simplicity, SimpleMeansEveryBasisVectorGenerates) {
  for (const auto& t : {a3_t(2, 2), c3(1), o3()}) {
    if (simplicity(t).verdict != Simplicity::Simple) continue;
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < t.dim(); ++i)
      for (std::size_t j = 0; j < t.dim(); ++j) ops.push_back(t.left_op(i, j));
    for (std::size_t i = 0; i < t.dim(); ++i) EXPECT_TRUE(subspace_close(t.dim(), {e(t.dim(), i)}, ops).is_full());
  }
}

TEST(Simplicity, EnvelopeModPMatchesExact) {
  for (const auto& t : {a3_t(2, 2), a3_t(1, 2), o3()}) {
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < t.dim(); ++i)
      for (std::size_t j = 0; j < t.dim(); ++j) ops.push_back(t.left_op(i, j));
    auto modp = envelope_dim_mod_p(ops, t.dim());
    ASSERT_TRUE(modp);
    EXPECT_EQ(*modp, associative_envelope(ops, t.dim()).dim()) << t.name();
  }
}
