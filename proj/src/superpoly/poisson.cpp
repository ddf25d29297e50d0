#include "trialg/superpoly/poisson.hpp"

#include <stdexcept>

namespace trialg {

namespace {

void require_even(const SuperPoly& f) {
  for (const auto& [mono, c] : f.terms())
    if (mono.odd) throw std::invalid_argument("poisson: odd variables present");
}

}  // namespace

UniversePtr poisson_universe(unsigned m) {
  if (m == 0) throw std::invalid_argument("poisson_universe: m must be >= 1");
  const unsigned k = m / 2;
  std::vector<std::string> names;
  for (unsigned i = 1; i <= k; ++i) names.push_back("p" + std::to_string(i));
  for (unsigned i = 1; i <= k; ++i) names.push_back("q" + std::to_string(i));
  if (m % 2) names.push_back("t");
  return make_universe(std::move(names));
}

SuperPoly euler(const SuperPoly& f, unsigned m) {
  const std::size_t k2 = 2 * (m / 2);
  SuperPoly r(f.universe());
  for (const auto& [mono, c] : f.terms()) {
    unsigned d = 0;
    for (std::size_t i = 0; i < k2; ++i) d += mono.exps[i];
    r.add_term(mono, c * Rational(d));
  }
  return r;
}

SuperPoly poisson_derivation(const SuperPoly& f, unsigned m) {
  if (m % 2 == 0) return SuperPoly(f.universe());
  return Rational(2) * f.derive_even(m - 1);
}

SuperPoly poisson(const SuperPoly& f, const SuperPoly& g, unsigned m) {
  require_even(f);
  require_even(g);
  if (f.is_zero() || g.is_zero()) return SuperPoly(f.universe() ? f.universe() : g.universe());
  const std::size_t k = m / 2;
  if (f.universe()->even.size() != 2 * k + m % 2)
    throw std::invalid_argument("poisson: universe does not match m");
  SuperPoly r(f.universe());
  for (std::size_t i = 0; i < k; ++i) {
    r += f.derive_even(i) * g.derive_even(k + i);
    r -= f.derive_even(k + i) * g.derive_even(i);
  }
  if (m % 2) {
    const std::size_t t = 2 * k;
    SuperPoly two_minus_e_f = Rational(2) * f - euler(f, m);
    SuperPoly two_minus_e_g = Rational(2) * g - euler(g, m);
    r += two_minus_e_f * g.derive_even(t);
    r -= f.derive_even(t) * two_minus_e_g;
  }
  return r;
}

LinearChange default_poisson_involution(unsigned m) {
  const std::size_t k = m / 2, n = 2 * k + m % 2;
  Matrix e(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    e(i, k + i) = 1;
    e(k + i, i) = 1;
  }
  if (m % 2) e(n - 1, n - 1) = -1;
  return {e, Matrix(0, 0)};
}

bool check_form_condition(const LinearChange& c, unsigned m) {
  const std::size_t k = m / 2, n = 2 * k + m % 2;
  if (c.even.rows() != n || c.even.cols() != n || c.odd.rows() != 0) return false;
  if (!c.is_involution()) return false;
  // sum p_i dq_i - q_i dp_i = x^T G dx; the pullback under x -> M x is x^T M^T G M dx.
  Matrix g(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    g(i, k + i) = 1;
    g(k + i, i) = -1;
  }
  if (c.even.transpose() * g * c.even != -g) return false;
  if (m % 2) {
    for (std::size_t b = 0; b < n; ++b)
      if (c.even(n - 1, b) != (b == n - 1 ? Rational(-1) : Rational(0))) return false;
  }
  return true;
}

}  // namespace trialg
