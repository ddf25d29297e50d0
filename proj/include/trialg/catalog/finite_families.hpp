#pragma once

#include <string>
#include <vector>

#include "trialg/trisys/tri_algebra.hpp"

namespace trialg {

/// O^3 with metric delta: [e_i,e_j,e_k] = eps_{ijkl} e_l, eps_1234 = 1.
TriAlgebra o3();
/// [e_i,e_j,e_k] = scale * eps_{ijkl} e_l / metric_l for a diagonal metric.
TriAlgebra o3(const Vector& metric, const Rational& scale);

/// Row-major matrix units of M_{m,n}, labelled e(i,j) from 1.
std::vector<std::string> matrix_unit_labels(std::size_t m, std::size_t n);
Matrix matrix_unit(std::size_t m, std::size_t n, std::size_t index);
/// Row-major coordinates of a matrix, and back.
Vector matrix_coords(const Matrix& x);
Matrix coords_matrix(std::size_t m, std::size_t n, const Vector& v);

/// [a,b,c] = a b* c - c b* a on M_{m,n} with b* = p b^T q (p is n x n, q is m x m).
TriAlgebra antitranspose_bracket(std::string name, std::size_t m, std::size_t n, const Matrix& p, const Matrix& q);

/// A^3(m,n;t).
TriAlgebra a3_t(std::size_t m, std::size_t n);
/// A^3(2h,2k;st), st(b) = J_{2k} b^T J_{2h}^{-1}.
TriAlgebra a3_st(std::size_t h, std::size_t k);
/// b* = k^{-1} b^T h with h (m x m) and k (n x n) symmetric invertible.
TriAlgebra star_bracket(const Matrix& h, const Matrix& k);
/// b+ = H_{2k} b^T H_{2h}^{-1} with both H skew-symmetric invertible.
TriAlgebra plus_bracket(const Matrix& h2h, const Matrix& h2k);

/// psi(X Y) = (Y -X)^T on M_{1,2n}, as a vector.
Vector c3_psi(const Vector& row);
/// C^3(2n): [A,B,C] = -A B^T C + C B^T A - C psi(A) psi(B)^T.
TriAlgebra c3(std::size_t n);
/// [a,b,c] = -a(k b^T h^{-1})c + c(k b^T h^{-1})a - c psi(a) h psi(b)^T k^{-1}, with a row u
/// read as the 2 x 2n matrix whose second row is u. h = diag(alpha, 1/alpha), k symmetric
/// symplectic.
TriAlgebra c3_star(const Matrix& h, const Matrix& k);

}  // namespace trialg
