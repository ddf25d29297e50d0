#pragma once

// Random parameter sets for the isomorphism lemmas, shared by unit and acceptance tests.

#include <random>
#include <stdexcept>
#include <string>

#include "trialg/catalog/finite_families.hpp"
#include "trialg/superlie/matrix_models.hpp"

namespace trialg::testing {

struct LemmaInstance {
  std::string label;
  TriAlgebra source;
  TriAlgebra target;
  Matrix map;
};

inline Matrix random_invertible(std::mt19937& g, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(g);
    if (!m.determinant().is_zero()) return m;
  }
}

inline Matrix random_symmetric(std::mt19937& g, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = d(g);
  return s;
}

/// Cayley transform of a random skew matrix: (I - S)(I + S)^{-1}.
inline Matrix random_orthogonal(std::mt19937& g, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      s(i, j) = d(g);
      s(j, i) = -s(i, j);
    }
  const Matrix id = Matrix::identity(n);
  const Matrix q = (id - s) * *(id + s).inverse();
  if (q.transpose() * q != id) throw std::logic_error("random_orthogonal");
  return q;
}

/// Product of two symplectic shears and a block-diagonal factor.
inline Matrix random_symplectic(std::mt19937& g, std::size_t n) {
  const Matrix id = Matrix::identity(n);
  Matrix upper = Matrix::identity(2 * n), lower = Matrix::identity(2 * n), diag(2 * n, 2 * n);
  upper.set_block(0, n, random_symmetric(g, n));
  lower.set_block(n, 0, random_symmetric(g, n));
  const Matrix m = random_invertible(g, n);
  diag.set_block(0, 0, m);
  diag.set_block(n, n, m.inverse()->transpose());
  const Matrix y = upper * lower * diag;
  const Matrix j = standard_j(2 * n);
  if (y.transpose() * j * y != j) throw std::logic_error("random_symplectic");
  return y;
}

inline Matrix map_matrix(std::size_t m, std::size_t n, const std::function<Matrix(const Matrix&)>& f) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < m * n; ++i) cols.push_back(matrix_coords(f(matrix_unit(m, n, i))));
  return Matrix::from_columns(cols, m * n);
}

/// h = x^T x, k = y^T y, phi(u) = x^{-1} u y from A^3(m,n;t) to the star bracket.
inline LemmaInstance lemma_star(std::mt19937& g, std::size_t m, std::size_t n) {
  const Matrix x = random_invertible(g, m), y = random_invertible(g, n);
  const Matrix xi = *x.inverse();
  const Matrix h = x.transpose() * x, k = y.transpose() * y;
  return {"h=" + h.literal() + " k=" + k.literal(), a3_t(m, n), star_bracket(h, k),
          map_matrix(m, n, [&](const Matrix& u) { return xi * u * y; })};
}

/// A, B rational orthogonal, H_2h = A^{-1} J A, H_2k = B^{-1} J B, phi(u) = A^{-1} u B
/// from A^3(2h,2k;st) to the plus bracket.
inline LemmaInstance lemma_plus(std::mt19937& g, std::size_t h, std::size_t k) {
  const Matrix a = random_orthogonal(g, 2 * h), b = random_orthogonal(g, 2 * k);
  const Matrix ai = a.transpose(), bi = b.transpose();
  const Matrix h2h = ai * standard_j(2 * h) * a, h2k = bi * standard_j(2 * k) * b;
  return {"H2h=" + h2h.literal() + " H2k=" + h2k.literal(), a3_st(h, k), plus_bracket(h2h, h2k),
          map_matrix(2 * h, 2 * k, [&](const Matrix& u) { return ai * u * b; })};
}

/// h = x x^T with x = diag(beta, 1/beta), k = y y^T with y symplectic, phi(u) = x u y^{-1}
/// with u read as the second row of a 2 x 2n matrix, i.e. u y^{-1} / beta, from C^3(2n).
inline LemmaInstance lemma_c3(std::mt19937& g, std::size_t n) {
  static const Rational betas[] = {2, Rational(1, 2), -3, Rational(2, 3), -1};
  std::uniform_int_distribution<std::size_t> pick(0, 4);
  const Rational beta = betas[pick(g)];
  const Matrix y = random_symplectic(g, n);
  const Matrix yi = *y.inverse();
  const Matrix h{{beta * beta, 0}, {0, (beta * beta).inverse()}};
  const Matrix k = y * y.transpose();
  return {"beta=" + beta.str() + " k=" + k.literal(), c3(n), c3_star(h, k),
          map_matrix(1, 2 * n, [&](const Matrix& u) { return beta.inverse() * (u * yi); })};
}

}  // namespace trialg::testing
