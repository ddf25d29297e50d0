#include <gtest/gtest.h>

#include <random>

#include "trialg/catalog/finite_families.hpp"
#include "trialg/catalog/o3_identification.hpp"
#include "trialg/catalog/polynomial_families.hpp"
#include "trialg/catalog/registry.hpp"
#include "trialg/superlie/matrix_models.hpp"
#include "trialg/superpoly/poisson.hpp"
#include "trialg/trisys/axioms.hpp"
#include "trialg/trisys/intertwiner.hpp"
#include "lemma_maps.hpp"

using trialg::testing::lemma_c3;
using trialg::testing::lemma_plus;
using trialg::testing::lemma_star;

using namespace trialg;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

SuperPoly var(const TriEvaluator& ev, const std::string& name) { return SuperPoly::var(ev.universe(), name); }
SuperPoly one(const TriEvaluator& ev) { return SuperPoly::constant(ev.universe(), 1); }

// [a,b,c] = a b* c - c b* a evaluated with plain matrix products.
TriAlgebra oracle_antitranspose(std::size_t m, std::size_t n, const std::function<Matrix(const Matrix&)>& star) {
  return tabulate("oracle", matrix_unit_labels(m, n), [&](std::size_t i, std::size_t j, std::size_t k) {
    const Matrix a = matrix_unit(m, n, i), b = matrix_unit(m, n, j), c = matrix_unit(m, n, k);
    return matrix_coords(a * star(b) * c - c * star(b) * a);
  });
}

}  // namespace

TEST(FiniteFamilies, O3) {
  const TriAlgebra o = o3();
  EXPECT_EQ(o.dim(), 4u);
  EXPECT_EQ(o.bracket(e(4, 0), e(4, 1), e(4, 2)), e(4, 3));
  EXPECT_EQ(o.bracket(e(4, 1), e(4, 0), e(4, 2)), -e(4, 3));
  EXPECT_EQ(o.bracket(e(4, 1), e(4, 2), e(4, 3)), -e(4, 0));
  EXPECT_TRUE(o.at(0, 0, 1).is_zero());
}

TEST(FiniteFamilies, A3tMatchesMatrixProducts) {
  for (auto [m, n] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 1}})
    EXPECT_EQ(a3_t(m, n), oracle_antitranspose(m, n, [](const Matrix& b) { return b.transpose(); }));
  EXPECT_TRUE(a3_t(1, 1).is_zero_bracket());
  EXPECT_EQ(a3_t(1, 2).bracket(e(2, 0), e(2, 0), e(2, 1)), e(2, 1));
}

TEST(FiniteFamilies, A3stMatchesMatrixProducts) {
  auto j = [](std::size_t r) {
    Matrix out(2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
      out(i, r + i) = 1;
      out(r + i, i) = -1;
    }
    return out;
  };
  for (auto [h, k] : {std::pair{1, 1}, {1, 2}}) {
    const Matrix jk = j(k), jh_inv = *j(h).inverse();
    EXPECT_EQ(a3_st(h, k), oracle_antitranspose(2 * h, 2 * k, [&](const Matrix& b) { return jk * b.transpose() * jh_inv; }));
  }
  EXPECT_EQ(a3_st(1, 1).dim(), 4u);
}

TEST(FiniteFamilies, StarSpecializesToTranspose) {
  EXPECT_EQ(star_bracket(Matrix::identity(2), Matrix::identity(3)), a3_t(2, 3));
  EXPECT_THROW(star_bracket(Matrix{{1, 1}, {0, 1}}, Matrix::identity(2)), std::invalid_argument);
  EXPECT_THROW(star_bracket(Matrix{{0, 0}, {0, 1}}, Matrix::identity(2)), std::invalid_argument);
}

TEST(FiniteFamilies, C3Values) {
  // -A B^t C + C B^t A - C psi(A) psi(B)^t at A = B = e1, C = e2:
  // -(1) e2 + 0 - (-1)(0,-1) = -2 e2.
  EXPECT_EQ(c3(1).bracket(e(2, 0), e(2, 0), e(2, 1)), Rational(-2) * e(2, 1));
  EXPECT_EQ(c3_psi({1, 0}), (Vector{0, -1}));
  EXPECT_EQ(c3_psi({0, 1}), (Vector{1, 0}));
  const TriAlgebra c = c3(2);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t d = 0; d < 4; ++d) EXPECT_EQ(c.at(a, b, d).to_dense(4), -c.at(d, b, a).to_dense(4));
}

TEST(FiniteFamilies, C3StarSpecializes) {
  EXPECT_EQ(c3_star(Matrix::identity(2), Matrix::identity(2)), c3(1));
  EXPECT_EQ(c3_star(Matrix::identity(2), Matrix::identity(4)), c3(2));
  EXPECT_THROW(c3_star(Matrix{{2, 0}, {0, 2}}, Matrix::identity(2)), std::invalid_argument);
  EXPECT_THROW(c3_star(Matrix::identity(2), Matrix{{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST(LemmaMaps, TransposeToStar) {
  std::mt19937 g(41);
  for (int trial = 0; trial < 3; ++trial) {
    const auto lm = lemma_star(g, 2, 1 + trial % 3);
    EXPECT_TRUE(check_intertwiner(lm.source, lm.target, lm.map).passed()) << lm.label;
  }
}

TEST(LemmaMaps, SymplecticToPlus) {
  std::mt19937 g(42);
  for (int trial = 0; trial < 3; ++trial) {
    const auto lm = lemma_plus(g, 1, 1 + trial % 2);
    EXPECT_TRUE(check_intertwiner(lm.source, lm.target, lm.map).passed()) << lm.label;
  }
}

TEST(LemmaMaps, C3ToStar) {
  std::mt19937 g(43);
  for (int trial = 0; trial < 3; ++trial) {
    const auto lm = lemma_c3(g, 1 + trial % 2);
    EXPECT_TRUE(check_intertwiner(lm.source, lm.target, lm.map).passed()) << lm.label;
  }
}

TEST(LemmaMaps, PerturbedMapFails) {
  std::mt19937 g(44);
  auto lm = lemma_star(g, 2, 2);
  lm.map(0, 1) += 1;
  ASSERT_FALSE(lm.map.determinant().is_zero());
  EXPECT_FALSE(check_intertwiner(lm.source, lm.target, lm.map).passed());
}

TEST(O3Identification, InvariantMetrics) {
  const auto ms = invariant_metrics(o3());
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0], ms[0](0, 0) * Matrix::identity(4));
}

TEST(O3Identification, SplitFormOfA3st) {
  const auto id = identify_o3(a3_st(1, 1));
  ASSERT_TRUE(id);
  EXPECT_TRUE(id->check.passed());
  EXPECT_EQ(id->positive, 2);
  EXPECT_EQ(id->negative, 2);
  const auto self = identify_o3(o3());
  ASSERT_TRUE(self);
  EXPECT_EQ(self->positive + self->negative, 4);
  EXPECT_TRUE(self->positive == 4 || self->negative == 4);
  EXPECT_FALSE(identify_o3(a3_t(2, 2)));
}

TEST(PolynomialFamilies, P3Values) {
  const TriEvaluator p1 = p3(1);
  const auto t = var(p1, "t");
  // {t,-1} = 2, {t,1}(-1) = 2, D(t)(-1) = -2.
  EXPECT_TRUE(elements_equal(p1.bracket({t}, {one(p1)}, {one(p1)}), {Rational(2) * one(p1)}));
  // {t,1} t + t {t,1} + D(t) t = -2t - 2t + 2t.
  EXPECT_TRUE(elements_equal(p1.bracket({t}, {t}, {one(p1)}), {Rational(-2) * t}));
  EXPECT_TRUE(elements_equal(p1.bracket({one(p1)}, {t}, {one(p1)}), {one(p1) - one(p1)}));

  const TriEvaluator p2 = p3(2);
  const auto p = var(p2, "p1"), q = var(p2, "q1");
  // Only {p1,q1} sigma(1) = -1 survives.
  EXPECT_TRUE(elements_equal(p2.bracket({p}, {one(p2)}, {q}), {-one(p2)}));
  // {p1,-q1} q1 + {p1,q1}(-q1) = -2 q1.
  EXPECT_TRUE(elements_equal(p2.bracket({p}, {p}, {q}), {Rational(-2) * q}));
  EXPECT_THROW(p3(2, LinearChange::identity(*poisson_universe(2))), std::invalid_argument);
}

TEST(PolynomialFamilies, SW3Values) {
  const TriEvaluator s = sw3();
  EXPECT_EQ(s.params.at("a"), "0,1;-1,0");
  const auto x = SuperPoly::var(s.universe(), "x");
  const auto c1 = SuperPoly::constant(s.universe(), 1);
  const auto r = s.bracket(s.embed(0, c1), s.embed(0, c1), s.embed(0, x));
  EXPECT_TRUE(elements_equal(r, s.embed(0, -c1)));
  EXPECT_TRUE(elements_equal(s.bracket(s.embed(0, c1), s.embed(0, c1), s.embed(0, c1)), s.zero()));
  EXPECT_THROW(sw3(Matrix{{0, 1}, {-1, 0}}, 1), std::invalid_argument);
  EXPECT_THROW(sw3(Matrix{{2, 0}, {0, 1}}, 1), std::invalid_argument);
}

TEST(PolynomialFamilies, SW3OuterSkewSymmetry) {
  const TriEvaluator s = sw3();
  const auto basis = s.test_basis(2);
  for (const auto& f : basis)
    for (const auto& g : basis)
      for (const auto& h : basis) {
        Element neg = s.bracket(h, g, f);
        for (auto& p : neg) p = -p;
        ASSERT_TRUE(elements_equal(s.bracket(f, g, h), neg)) << s.str(f) << " " << s.str(g) << " " << s.str(h);
      }
}

TEST(PolynomialFamilies, DeterminantValues) {
  const TriEvaluator s = s3();
  EXPECT_TRUE(elements_equal(s.bracket({var(s, "x1")}, {var(s, "x2")}, {one(s)}), {-one(s)}));
  const TriEvaluator w = w3();
  EXPECT_TRUE(elements_equal(w.bracket({var(w, "x1")}, {var(w, "x2")}, {var(w, "x3")}), {-one(w)}));
  EXPECT_THROW(s3(Matrix{{2, 0}, {0, Rational(1, 2)}}), std::invalid_argument);
  EXPECT_THROW(w3(Matrix::identity(2)), std::invalid_argument);
}

TEST(PolynomialFamilies, N6AtLowDegree) {
  SweepOptions opt;
  opt.degree_cap = 2;
  for (const auto& ev : {p3(1), p3(2), sw3(), s3(), w3()}) EXPECT_TRUE(check_n6(ev, opt).passed()) << ev.name();
}

TEST(PolynomialFamilies, TwistedFamiliesAreNotN8) {
  SweepOptions opt;
  opt.degree_cap = 2;
  EXPECT_FALSE(check_n8(s3(), opt).passed());
  EXPECT_TRUE(check_n8(s3(Matrix::identity(2)), opt).passed());
}

TEST(Registry, EveryFamilyBuilds) {
  for (const auto& f : family_names()) {
    FamilyParams p;
    p.family = f;
    if (f == "star") {
      p.hmat = Matrix{{2, 1}, {1, 1}};
      p.kmat = Matrix::identity(2);
    }
    if (f == "c3star") {
      p.hmat = Matrix{{2, 0}, {0, Rational(1, 2)}};
      p.kmat = Matrix::identity(2);
    }
    const Structure s = build_family(p);
    EXPECT_EQ(std::holds_alternative<TriAlgebra>(s), is_finite_family(f)) << f;
  }
  EXPECT_THROW(build_family({.family = "nope"}), std::invalid_argument);
  EXPECT_THROW(build_family({.family = "star"}), std::invalid_argument);
}

TEST(Registry, EvaluatorParamsRoundTrip) {
  for (const auto& f : {"p3", "sw3", "s3", "w3"}) {
    const auto ev = std::get<TriEvaluator>(build_family({.family = f}));
    const auto back = evaluator_from_params(ev.family, ev.params);
    EXPECT_EQ(back.name(), ev.name());
    EXPECT_EQ(back.params, ev.params);
  }
  EXPECT_THROW(evaluator_from_params("o3", {}), std::invalid_argument);
}
