#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trialg/superlie/super_algebra.hpp"

namespace trialg {

/// A matrix Lie superalgebra with block sizes (p|q) and its chosen homogeneous basis.
struct MatrixModel {
  std::string name;
  std::size_t p = 0;
  std::size_t q = 0;
  bool modulo_identity = false;
  std::vector<Matrix> basis;
  SuperAlgebra algebra;

  /// Coordinates of a matrix in the basis (taken modulo I when modulo_identity).
  [[nodiscard]] std::optional<Vector> coordinates(const Matrix& x) const;
  /// As coordinates(), but throws std::invalid_argument outside the span.
  [[nodiscard]] Vector coords(const Matrix& x) const;
  /// Representative of a coordinate vector.
  [[nodiscard]] Matrix element(const Vector& v) const;

  SpanSolver solver{0};
};

/// Supercommutator XY - (-1)^{|X||Y|} YX of homogeneous matrices.
Matrix supercommutator(const Matrix& x, int px, const Matrix& y, int py);

/// sl(m,n), with psl(n,n) = sl(n,n)/FI when m = n. Blocks are ordered (n|m) so that
/// L_-1 consists of m x n matrices c with basis c(i,j) in row-major order.
MatrixModel sl_model(std::size_t m, std::size_t n);

/// osp(2,2n) with blocks (2|2n): odd elements [[0, X], [J X^T G, 0]], G = antidiag(1,1),
/// L_-1 from the second row of X and L_1 from the first.
MatrixModel osp_model(std::size_t n);

/// (a b; c d) -> (-a^T, c^T; -b^T, -d^T).
Matrix apply_sigma1(const Matrix& x, std::size_t p, std::size_t q);
/// (a b; c d) -> (-a^st, c^st; -b^st, -d^st); needs p and q even.
Matrix apply_sigma2(const Matrix& x, std::size_t p, std::size_t q);
/// X^st = J_q X^T J_p^{-1} for a p x q matrix X.
Matrix symplectic_transpose(const Matrix& x);
/// [[0, I_r], [-I_r, 0]].
Matrix standard_j(std::size_t two_r);

/// Matrix of a matrix-level map on the model's basis. Throws std::invalid_argument if
/// an image leaves the model or, modulo I, the map does not preserve FI.
GradedConjugation conjugation_from_map(const MatrixModel& model, const std::function<Matrix(const Matrix&)>& f);

GradedConjugation sigma1(const MatrixModel& model);
GradedConjugation sigma2(const MatrixModel& model);
GradedConjugation sigma_osp(const MatrixModel& model);

/// sigma1(sigma1(X)) = P X P^{-1} with P = diag(I_p, -I_q), entrywise on every basis
/// representative (modulo I when the model is a quotient).
bool check_sigma1_square(const MatrixModel& model);

}  // namespace trialg
