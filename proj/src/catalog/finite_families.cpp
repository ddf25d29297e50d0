#include "trialg/catalog/finite_families.hpp"

#include <array>
#include <stdexcept>

#include "trialg/superlie/matrix_models.hpp"

namespace trialg {

namespace {

int levi_civita(std::array<std::size_t, 4> p) {
  int sign = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

Rational row_dot(const Matrix& a, const Matrix& b) {
  Rational s;
  for (std::size_t i = 0; i < a.cols(); ++i) s.add_mul(a(0, i), b(0, i));
  return s;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

TriAlgebra o3() { return o3(Vector(4, Rational(1)), Rational(1)); }

TriAlgebra o3(const Vector& metric, const Rational& scale) {
  require(metric.size() == 4, "o3: metric must have 4 entries");
  for (const auto& g : metric) require(!g.is_zero(), "o3: metric must be nondegenerate");
  require(!scale.is_zero(), "o3: scale must be nonzero");
  bool standard = scale.is_one();
  for (const auto& g : metric) standard = standard && g.is_one();
  std::string name = standard ? "O3" : "O3(" + to_string(metric) + ";" + scale.str() + ")";
  return tabulate(name, {"e1", "e2", "e3", "e4"}, [&](std::size_t i, std::size_t j, std::size_t k) {
    Vector v(4);
    for (std::size_t l = 0; l < 4; ++l)
      if (int e = levi_civita({i, j, k, l})) v[l] = Rational(e) * scale / metric[l];
    return v;
  });
}

std::vector<std::string> matrix_unit_labels(std::size_t m, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back("e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  return out;
}

Matrix matrix_unit(std::size_t m, std::size_t n, std::size_t index) {
  Matrix x(m, n);
  x(index / n, index % n) = 1;
  return x;
}

Vector matrix_coords(const Matrix& x) { return x.flat(); }

Matrix coords_matrix(std::size_t m, std::size_t n, const Vector& v) { return Matrix::from_flat(m, n, v); }

TriAlgebra antitranspose_bracket(std::string name, std::size_t m, std::size_t n, const Matrix& p, const Matrix& q) {
  require(m > 0 && n > 0, "antitranspose_bracket: sizes must be positive");
  require(p.rows() == n && p.cols() == n && q.rows() == m && q.cols() == m,
          "antitranspose_bracket: p must be n x n and q m x m");
  std::vector<Matrix> units, stars;
  for (std::size_t i = 0; i < m * n; ++i) {
    units.push_back(matrix_unit(m, n, i));
    stars.push_back(p * units.back().transpose() * q);
  }
  return tabulate(std::move(name), matrix_unit_labels(m, n), [&](std::size_t a, std::size_t b, std::size_t c) {
    return matrix_coords(units[a] * stars[b] * units[c] - units[c] * stars[b] * units[a]);
  });
}

TriAlgebra a3_t(std::size_t m, std::size_t n) {
  require(m > 0 && n > 0, "a3_t: m and n must be positive");
  return antitranspose_bracket("A3(" + std::to_string(m) + "," + std::to_string(n) + ";t)", m, n,
                               Matrix::identity(n), Matrix::identity(m));
}

TriAlgebra a3_st(std::size_t h, std::size_t k) {
  require(h > 0 && k > 0, "a3_st: h and k must be positive");
  return antitranspose_bracket("A3(" + std::to_string(2 * h) + "," + std::to_string(2 * k) + ";st)", 2 * h, 2 * k,
                               standard_j(2 * k), -standard_j(2 * h));
}

TriAlgebra star_bracket(const Matrix& h, const Matrix& k) {
  require(h.is_square() && k.is_square(), "star_bracket: h and k must be square");
  require(h.is_symmetric() && k.is_symmetric(), "star_bracket: h and k must be symmetric");
  auto kinv = k.inverse();
  require(kinv && !h.determinant().is_zero(), "star_bracket: h and k must be invertible");
  return antitranspose_bracket("A3*(" + h.literal() + "|" + k.literal() + ")", h.rows(), k.rows(), *kinv, h);
}

TriAlgebra plus_bracket(const Matrix& h2h, const Matrix& h2k) {
  require(h2h.is_square() && h2k.is_square(), "plus_bracket: H must be square");
  require(h2h.is_skew() && h2k.is_skew(), "plus_bracket: H must be skew-symmetric");
  auto hinv = h2h.inverse();
  require(hinv && !h2k.determinant().is_zero(), "plus_bracket: H must be invertible");
  return antitranspose_bracket("A3+(" + h2h.literal() + "|" + h2k.literal() + ")", h2h.rows(), h2k.rows(), h2k,
                               *hinv);
}

Vector c3_psi(const Vector& row) {
  require(row.size() % 2 == 0, "c3_psi: length must be even");
  const std::size_t n = row.size() / 2;
  Vector out(row.size());
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = row[n + i];
    out[n + i] = -row[i];
  }
  return out;
}

TriAlgebra c3(std::size_t n) {
  require(n > 0, "c3: n must be positive");
  return c3_star(Matrix::identity(2), Matrix::identity(2 * n));
}

TriAlgebra c3_star(const Matrix& h, const Matrix& k) {
  require(h.rows() == 2 && h.cols() == 2 && h(0, 1).is_zero() && h(1, 0).is_zero() && !h(0, 0).is_zero() &&
              (h(0, 0) * h(1, 1)).is_one(),
          "c3_star: h must be diag(alpha, 1/alpha)");
  require(k.is_square() && k.rows() % 2 == 0 && k.rows() > 0, "c3_star: k must be 2n x 2n");
  require(k.is_symmetric(), "c3_star: k must be symmetric");
  const Matrix j = standard_j(k.rows());
  require(k.transpose() * j * k == j, "c3_star: k must be symplectic");
  const Matrix kinv = *k.inverse();
  const std::size_t dim = k.rows();
  const Rational alpha = h(0, 0);
  const bool standard = alpha.is_one() && k == Matrix::identity(dim);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  std::string name = standard ? "C3(" + std::to_string(dim) + ")" : "C3*(" + h.literal() + "|" + k.literal() + ")";
  std::vector<Matrix> e;
  for (std::size_t i = 0; i < dim; ++i) e.push_back(matrix_unit(1, dim, i));
  return tabulate(name, labels, [&](std::size_t a, std::size_t b, std::size_t c) {
    const Matrix& A = e[a];
    const Matrix& B = e[b];
    const Matrix& C = e[c];
    Matrix kb = B * k;  // (k b^T)^T, k symmetric
    Matrix psi_a = Matrix::from_rows({c3_psi(A.row(0))}, dim);
    Matrix psi_b = Matrix::from_rows({c3_psi(B.row(0))}, dim);
    Matrix r = row_dot(C, kb) * A - row_dot(A, kb) * C - row_dot(C, psi_a) * (psi_b * kinv);
    return (alpha * r).row(0);
  });
}

}  // namespace trialg
