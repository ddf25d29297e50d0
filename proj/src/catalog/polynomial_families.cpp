#include "trialg/catalog/polynomial_families.hpp"

#include <stdexcept>

#include "trialg/superpoly/poisson.hpp"

namespace trialg {

namespace {

// Expands a 3x3 determinant whose entries are polynomials.
SuperPoly det3(const SuperPoly (&m)[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

LinearChange even_change(const Matrix& m) { return {m, Matrix(0, 0)}; }

void check_unimodular_involution(const Matrix& phi, std::size_t n, const char* who) {
  if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument(std::string(who) + ": phi has the wrong size");
  if (!phi.determinant().is_one()) throw std::invalid_argument(std::string(who) + ": det phi must be 1");
  if (phi * phi != Matrix::identity(n)) throw std::invalid_argument(std::string(who) + ": phi^2 must be 1");
}

std::vector<std::string> var_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

}  // namespace

TriEvaluator p3(unsigned m, const LinearChange& phi) {
  if (m == 0) throw std::invalid_argument("p3: m must be positive");
  if (!check_form_condition(phi, m)) throw std::invalid_argument("p3: phi fails the form condition");
  auto u = poisson_universe(m);
  auto sigma = [phi](const SuperPoly& g) { return -g.substitute(phi); };
  auto br = [m, sigma](const Element& x, const Element& y, const Element& z) {
    const SuperPoly& f = x[0];
    const SuperPoly sg = sigma(y[0]);
    const SuperPoly& h = z[0];
    SuperPoly r = poisson(f, sg, m) * h + poisson(f, h, m) * sg + f * poisson(sg, h, m);
    if (m % 2) r += poisson_derivation(f, m) * sg * h - f * sg * poisson_derivation(h, m);
    return Element{r};
  };
  TriEvaluator e("P3(" + std::to_string(m) + ";" + phi.even.literal() + ")", u, {"P"}, br);
  e.family = "p3";
  e.params = {{"m", std::to_string(m)}, {"phi", phi.even.literal()}};
  return e;
}

TriEvaluator p3(unsigned m) { return p3(m, default_poisson_involution(m)); }

TriEvaluator sw3(const Matrix& a, const Rational& phi) {
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("sw3: a must be 2 x 2");
  if (!a.determinant().is_one()) throw std::invalid_argument("sw3: det a must be 1");
  const Matrix a2 = a * a, id = Matrix::identity(2);
  const bool ok = (a2 == -id && phi == Rational(-1)) || (a2 == id && phi == Rational(1));
  if (!ok) throw std::invalid_argument("sw3: need a^2 = -1 with phi = -1, or a^2 = 1 with phi = 1");
  auto u = make_universe({"x"});
  const LinearChange reflect = even_change(Matrix{{phi}});
  auto d = [](const SuperPoly& f) { return f.derive_even(0); };
  // Basis case [f<i>, g<j>, h<k>]; i, j, k in {0, 1}.
  auto single = [a, reflect, d](std::size_t i, const SuperPoly& f, std::size_t j, const SuperPoly& g0, std::size_t k,
                                const SuperPoly& h, Element& out) {
    if (f.is_zero() || g0.is_zero() || h.is_zero()) return;
    const SuperPoly g = g0.substitute(reflect);
    if (i == k) {
      const Rational& coef = j == i ? a(i, 1 - i) : a(j, j);
      const Rational sign(i == 0 ? -1 : 1);  // (-1)^i with copies numbered from 1
      out[i] += (sign * coef) * ((f * d(h) - d(f) * h) * g);
      return;
    }
    if (i == 0) {
      out[0] += a(j, 0) * ((f * d(g) - d(f) * g) * h);
      out[1] += a(j, 1) * (f * (h * d(g) - d(h) * g));
      return;
    }
    // [f<2>, g, h<1>] = -[h<1>, g, f<2>]
    out[0] -= a(j, 0) * ((h * d(g) - d(h) * g) * f);
    out[1] -= a(j, 1) * (h * (f * d(g) - d(f) * g));
  };
  auto br = [u, single](const Element& x, const Element& y, const Element& z) {
    Element out{SuperPoly(u), SuperPoly(u)};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) single(i, x[i], j, y[j], k, z[k], out);
    return out;
  };
  TriEvaluator e("SW3(" + a.literal() + ";" + phi.str() + ")", u, {"<1>", "<2>"}, br);
  e.family = "sw3";
  e.params = {{"a", a.literal()}, {"phi", phi.str()}};
  return e;
}

TriEvaluator sw3() { return sw3(Matrix{{0, 1}, {-1, 0}}, Rational(-1)); }

TriEvaluator s3(const Matrix& phi) {
  check_unimodular_involution(phi, 2, "s3");
  auto u = make_universe(var_names(2));
  const LinearChange c = even_change(phi);
  auto br = [c](const Element& x, const Element& y, const Element& z) {
    const SuperPoly& f = x[0];
    const SuperPoly g = y[0].substitute(c);
    const SuperPoly& h = z[0];
    const SuperPoly m[3][3] = {{f, g, h},
                               {f.derive_even(0), g.derive_even(0), h.derive_even(0)},
                               {f.derive_even(1), g.derive_even(1), h.derive_even(1)}};
    return Element{det3(m)};
  };
  TriEvaluator e("S3(" + phi.literal() + ")", u, {"A"}, br);
  e.family = "s3";
  e.params = {{"phi", phi.literal()}};
  return e;
}

TriEvaluator s3() { return s3(-Matrix::identity(2)); }

TriEvaluator w3(const Matrix& phi) {
  check_unimodular_involution(phi, 3, "w3");
  auto u = make_universe(var_names(3));
  const LinearChange c = even_change(phi);
  auto br = [c](const Element& x, const Element& y, const Element& z) {
    const SuperPoly g = y[0].substitute(c);
    const SuperPoly* col[3] = {&x[0], &g, &z[0]};
    SuperPoly m[3][3];
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 3; ++s) m[r][s] = col[s]->derive_even(r);
    return Element{det3(m)};
  };
  TriEvaluator e("W3(" + phi.literal() + ")", u, {"A"}, br);
  e.family = "w3";
  e.params = {{"phi", phi.literal()}};
  return e;
}

TriEvaluator w3() {
  Matrix phi = Matrix::identity(3);
  phi(1, 1) = -1;
  phi(2, 2) = -1;
  return w3(phi);
}

}  // namespace trialg
