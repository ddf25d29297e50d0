#include <gtest/gtest.h>

#include <random>

#include "trialg/superpoly/poisson.hpp"
#include "trialg/superpoly/superpoly.hpp"

using namespace trialg;

namespace {

SuperPoly v(const UniversePtr& u, const std::string& n) { return SuperPoly::var(u, n); }
SuperPoly c(const UniversePtr& u, const Rational& x) { return SuperPoly::constant(u, x); }

SuperPoly random_monomial(std::mt19937& g, const UniversePtr& u, unsigned cap) {
  auto all = monomials_up_to(*u, cap);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  int k = coef(g);
  return SuperPoly::term(u, all[pick(g)], k == 0 ? 1 : k);
}

}  // namespace

TEST(SuperPoly, OddGenerators) {
  auto u = make_universe({"x"}, {"xi1", "xi2"});
  const auto x1 = v(u, "xi1"), x2 = v(u, "xi2");
  EXPECT_EQ(x2 * x1, -(x1 * x2));
  EXPECT_TRUE((x1 * x1).is_zero());
  const auto x = v(u, "x");
  EXPECT_EQ((x + c(u, 1)) * (x - c(u, 1)), x * x - c(u, 1));
}

TEST(SuperPoly, Derivatives) {
  auto u = make_universe({"x"}, {"xi1", "xi2"});
  const auto x1 = v(u, "xi1"), x2 = v(u, "xi2"), x = v(u, "x");
  EXPECT_EQ((x1 * x2).derive("xi1"), x2);
  EXPECT_EQ((x1 * x2).derive("xi2"), -x1);
  EXPECT_EQ((x * x * x).derive("x"), Rational(3) * (x * x));
  EXPECT_THROW((void)x.derive("y"), std::exception);
}

TEST(SuperPoly, UniverseMismatch) {
  auto u = make_universe({"x"});
  auto w = make_universe({"y"});
  EXPECT_THROW((void)(v(u, "x") * v(w, "y")), std::exception);
}

TEST(SuperPoly, Substitution) {
  auto u = make_universe({"x"});
  LinearChange neg{Matrix{{-1}}, Matrix(0, 0)};
  const auto x = v(u, "x");
  EXPECT_EQ((x * x).substitute(neg), x * x);

  auto u2 = make_universe({"x1", "x2"});
  LinearChange swap{Matrix{{0, 1}, {1, 0}}, Matrix(0, 0)};
  EXPECT_EQ((v(u2, "x1") * v(u2, "x2")).substitute(swap), v(u2, "x1") * v(u2, "x2"));

  auto pu = poisson_universe(2);
  const auto p = v(pu, "p1"), q = v(pu, "q1");
  EXPECT_EQ((p * q * q).substitute(default_poisson_involution(2)), q * p * p);
}

TEST(SuperPoly, SuperCommutativityAndLeibniz) {
  std::mt19937 g(21);
  auto u = make_universe({"x", "y"}, {"xi1", "xi2", "xi3"});
  for (int t = 0; t < 200; ++t) {
    const auto f = random_monomial(g, u, 3), h = random_monomial(g, u, 3);
    const int pf = *f.parity(), ph = *h.parity();
    EXPECT_EQ(f * h, Rational((pf & ph) ? -1 : 1) * (h * f));
    for (const char* xi : {"xi1", "xi2", "xi3"}) {
      const auto lhs = (f * h).derive(xi);
      const auto rhs = f.derive(xi) * h + Rational(pf ? -1 : 1) * (f * h.derive(xi));
      EXPECT_EQ(lhs, rhs) << f.str() << " * " << h.str() << " by " << xi;
    }
    const auto k = random_monomial(g, u, 2);
    EXPECT_EQ((f * h) * k, f * (h * k));
  }
}

TEST(SuperPoly, InvolutionSubstitutionRoundTrips) {
  std::mt19937 g(22);
  auto u = make_universe({"x1", "x2", "x3"}, {"xi1", "xi2"});
  LinearChange c{Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}, Matrix{{0, 1}, {1, 0}}};
  ASSERT_TRUE(c.is_involution());
  for (int t = 0; t < 50; ++t) {
    const auto f = random_monomial(g, u, 4);
    EXPECT_EQ(f.substitute(c).substitute(c), f);
    const auto h = random_monomial(g, u, 2);
    EXPECT_EQ((f * h).substitute(c), f.substitute(c) * h.substitute(c));
  }
}

TEST(Poisson, Examples) {
  auto u2 = poisson_universe(2);
  EXPECT_EQ(poisson(v(u2, "p1"), v(u2, "q1"), 2), c(u2, 1));
  auto u1 = poisson_universe(1);
  EXPECT_TRUE(poisson(v(u1, "t"), v(u1, "t"), 1).is_zero());
  auto u3 = poisson_universe(3);
  EXPECT_EQ(poisson(v(u3, "t"), v(u3, "p1"), 3), -v(u3, "p1"));
  EXPECT_EQ(poisson_derivation(v(u3, "t") * v(u3, "t"), 3), Rational(4) * v(u3, "t"));
  EXPECT_TRUE(poisson_derivation(v(u2, "p1"), 2).is_zero());
}

TEST(Poisson, JacobiAndAntisymmetry) {
  for (unsigned m : {1u, 2u, 3u}) {
    auto u = poisson_universe(m);
    const auto mons = monomials_up_to(*u, m == 3 ? 2 : 3);
    std::vector<SuperPoly> basis;
    for (const auto& mo : mons) basis.push_back(SuperPoly::term(u, mo));
    for (const auto& a : basis)
      for (const auto& b : basis) {
        ASSERT_EQ(poisson(a, b, m), -poisson(b, a, m));
        for (const auto& d : basis) {
          const auto j = poisson(a, poisson(b, d, m), m) + poisson(b, poisson(d, a, m), m) +
                         poisson(d, poisson(a, b, m), m);
          ASSERT_TRUE(j.is_zero()) << a.str() << ", " << b.str() << ", " << d.str();
        }
      }
  }
}

TEST(Poisson, FormCondition) {
  auto u2 = poisson_universe(2);
  EXPECT_TRUE(check_form_condition(default_poisson_involution(2), 2));
  EXPECT_FALSE(check_form_condition(LinearChange::identity(*u2), 2));
  EXPECT_TRUE(check_form_condition(LinearChange{Matrix{{-1}}, Matrix(0, 0)}, 1));
  EXPECT_FALSE(check_form_condition(LinearChange{Matrix{{2}}, Matrix(0, 0)}, 1));
}
