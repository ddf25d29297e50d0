#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "trialg/exactcore/linalg.hpp"
#include "trialg/exactcore/matrix.hpp"
#include "trialg/exactcore/rational.hpp"

using namespace trialg;

namespace {

Rational rnd(std::mt19937& g, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(d(g), den(g));
}

Matrix random_matrix(std::mt19937& g, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rnd(g);
  return m;
}

// Leibniz expansion, independent of the elimination in Matrix::determinant.
Rational leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
}

TEST(Rational, MatchesGmpOnRandomChains) {
  std::mt19937 g(7);
  std::uniform_int_distribution<std::int64_t> big(-(std::int64_t(1) << 40), std::int64_t(1) << 40);
  std::uniform_int_distribution<int> op(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Rational r = 1;
    mpq_class q = 1;
    for (int step = 0; step < 12; ++step) {
      std::int64_t n = big(g), d = big(g);
      if (d == 0) d = 1;
      const Rational x(n, d);
      mpq_class y(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
      y.canonicalize();
      switch (op(g)) {
        case 0: r += x; q += y; break;
        case 1: r -= x; q -= y; break;
        case 2: r *= x; q *= y; break;
        default:
          if (n == 0) break;
          r /= x;
          q /= y;
      }
      ASSERT_EQ(r.to_mpq(), q);
    }
  }
}

TEST(Rational, DemotesAfterOverflow) {
  Rational x = Rational(std::int64_t(1) << 62);
  Rational y = x * x;
  EXPECT_FALSE(y.is_small());
  EXPECT_TRUE((y / x).is_small());
  EXPECT_EQ(y / x, x);
}

TEST(Matrix, ParseAndLiteral) {
  const Matrix m = Matrix::parse("[1, -1/2; 0, 3]");
  EXPECT_EQ(m, (Matrix{{1, Rational(-1, 2)}, {0, 3}}));
  EXPECT_EQ(Matrix::parse(m.literal()), m);
  EXPECT_THROW(Matrix::parse("1,2;3"), std::exception);
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937 g(11);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      const Matrix m = random_matrix(g, n, n);
      EXPECT_EQ(m.determinant(), leibniz_det(m));
    }
}

TEST(Matrix, InverseIsTwoSided) {
  std::mt19937 g(12);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = random_matrix(g, 4, 4);
    auto inv = m.inverse();
    if (m.determinant().is_zero()) {
      EXPECT_FALSE(inv);
      continue;
    }
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, Matrix::identity(4));
    EXPECT_EQ(*inv * m, Matrix::identity(4));
  }
}

TEST(Linalg, RrefExamples) {
  auto id = rref(Matrix::identity(2));
  EXPECT_EQ(id.form, Matrix::identity(2));
  EXPECT_EQ(id.rank, 2u);
  auto z = rref(Matrix(3, 3));
  EXPECT_TRUE(z.form.is_zero());
  EXPECT_EQ(z.rank, 0u);
  auto r = rref(Matrix{{2, 4}, {1, 2}});
  EXPECT_EQ(r.form, (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(r.rank, 1u);
}

TEST(Linalg, RrefIdempotentAndNullspaceComplete) {
  std::mt19937 g(13);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(g, 3 + t % 3, 5);
    if (t % 4 == 0) m.set_block(0, 0, Matrix(1, 5));  // force rank drops
    const auto r = rref(m);
    EXPECT_EQ(rref(r.form).form, r.form);
    const auto ns = nullspace(m);
    EXPECT_EQ(ns.size(), 5 - r.rank);
    for (const auto& v : ns) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(Linalg, SolveLinear) {
  EXPECT_EQ(*solve_linear(Matrix::identity(2), {1, 2}), (Vector{1, 2}));
  EXPECT_EQ(*solve_linear(Matrix{{1, 1}}, {3}), (Vector{3, 0}));
  EXPECT_FALSE(solve_linear(Matrix{{1}, {1}}, {1, 2}));
  std::mt19937 g(14);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = random_matrix(g, 3, 4);
    const Vector x0{rnd(g), rnd(g), rnd(g), rnd(g)};
    const Vector b = a.apply(x0);
    auto x = solve_linear(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a.apply(*x), b);
  }
}

TEST(Linalg, SubspaceClose) {
  const Matrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  EXPECT_TRUE(subspace_close(3, {}, {swap}).is_zero());
  EXPECT_EQ(subspace_close(3, {unit_vector(3, 0)}, {swap}),
            Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)}));
  EXPECT_EQ(subspace_close(3, {unit_vector(3, 0)}, {}).dim(), 1u);

  std::mt19937 g(15);
  for (int t = 0; t < 20; ++t) {
    const Matrix op = random_matrix(g, 4, 4);
    Matrix nil(4, 4);
    nil(0, 1) = rnd(g);
    nil(1, 2) = 1;
    const Vector seed{rnd(g), rnd(g), 0, 0};
    const Subspace s = subspace_close(4, {seed}, {nil, t % 2 ? op : nil});
    EXPECT_TRUE(s.contains(seed));
    for (const auto& b : s.basis()) {
      EXPECT_TRUE(s.contains(nil.apply(b)));
      if (t % 2) EXPECT_TRUE(s.contains(op.apply(b)));
    }
  }
}

TEST(Linalg, SpanSolverModuloAndCoordinates) {
  SpanSolver s(3);
  s.add_modulo({1, 1, 1});
  EXPECT_TRUE(s.add({1, 0, 0}));
  EXPECT_FALSE(s.add({0, -1, -1}));  // = e1 - (1,1,1)
  EXPECT_TRUE(s.add({0, 1, 0}));
  auto c = s.coordinates({3, 2, 1});  // = 2 e1 + e2 + (1,1,1)
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (Vector{2, 1}));
}

TEST(Linalg, CongruenceDiagonalizes) {
  std::mt19937 g(16);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_matrix(g, 4, 4);
    Matrix s = a + a.transpose();
    if (t % 3 == 0)
      for (std::size_t i = 0; i < 4; ++i) s(i, i) = 0;  // zero diagonal needs the pairing step
    const Congruence c = diagonalize_symmetric(s);
    ASSERT_FALSE(c.p.determinant().is_zero());
    const Matrix d = c.p.transpose() * s * c.p;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d(i, j), i == j ? c.diagonal[i] : Rational(0));
  }
}
