#include "trialg/superlie/matrix_models.hpp"

#include <stdexcept>

namespace trialg {

namespace {

struct Candidate {
  Matrix m;
  int degree;
  std::string label;
};

Matrix unit(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = 1;
  return m;
}

std::string idx2(std::size_t a, std::size_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

MatrixModel assemble(std::string name, std::size_t p, std::size_t q, bool mod_identity,
                     const std::vector<Candidate>& cands) {
  const std::size_t sz = p + q;
  MatrixModel out;
  out.name = std::move(name);
  out.p = p;
  out.q = q;
  out.modulo_identity = mod_identity;
  out.solver = SpanSolver(sz * sz);
  if (mod_identity) out.solver.add_modulo(Matrix::identity(sz).flat());
  std::vector<std::string> labels;
  std::vector<int> degrees, parities;
  for (const auto& c : cands) {
    if (!out.solver.add(c.m.flat())) continue;
    out.basis.push_back(c.m);
    labels.push_back(c.label);
    degrees.push_back(c.degree);
    parities.push_back(c.degree & 1);
  }
  SuperAlgebra g(out.name, labels, degrees, parities);
  const std::size_t n = out.basis.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix br = supercommutator(out.basis[i], parities[i], out.basis[j], parities[j]);
      auto v = out.solver.coordinates(br.flat());
      if (!v) throw std::logic_error(out.name + ": basis is not closed under the supercommutator");
      g.set(i, j, SparseVec::from_dense(*v));
    }
  out.algebra = std::move(g);
  return out;
}

Matrix apply_blockwise(const Matrix& x, std::size_t p, std::size_t q, Matrix (*tr)(const Matrix&)) {
  if (x.rows() != p + q || x.cols() != p + q) throw std::invalid_argument("conjugation: shape mismatch");
  Matrix a = x.block(0, 0, p, p), b = x.block(0, p, p, q), c = x.block(p, 0, q, p), d = x.block(p, p, q, q);
  Matrix out(p + q, p + q);
  out.set_block(0, 0, -tr(a));
  out.set_block(0, p, tr(c));
  out.set_block(p, 0, -tr(b));
  out.set_block(p, p, -tr(d));
  return out;
}

Matrix plain_transpose(const Matrix& x) { return x.transpose(); }

}  // namespace

std::optional<Vector> MatrixModel::coordinates(const Matrix& x) const {
  if (x.rows() != p + q || x.cols() != p + q) return std::nullopt;
  return solver.coordinates(x.flat());
}

Vector MatrixModel::coords(const Matrix& x) const {
  auto v = coordinates(x);
  if (!v) throw std::invalid_argument(name + ": matrix is not in the model");
  return *v;
}

Matrix MatrixModel::element(const Vector& v) const {
  Matrix m(p + q, p + q);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!v.at(i).is_zero()) m += v[i] * basis[i];
  return m;
}

Matrix supercommutator(const Matrix& x, int px, const Matrix& y, int py) {
  if (px & py & 1) return x * y + y * x;
  return x * y - y * x;
}

MatrixModel sl_model(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("sl_model: m and n must be positive");
  const std::size_t p = n, q = m, sz = p + q;
  std::vector<Candidate> c;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) c.push_back({unit(sz, p + i, j), -1, "c" + idx2(i, j)});
  for (std::size_t r = 0; r < sz; ++r)
    for (std::size_t s = 0; s < sz; ++s)
      if (r != s && (r < p) == (s < p)) c.push_back({unit(sz, r, s), 0, "E" + idx2(r, s)});
  for (std::size_t r = 0; r + 1 < sz; ++r) {
    Matrix h = unit(sz, r, r);
    if (r + 1 == p)
      h(r + 1, r + 1) = 1;  // supertrace zero across the block boundary
    else
      h(r + 1, r + 1) = -1;
    c.push_back({h, 0, "H(" + std::to_string(r) + ")"});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) c.push_back({unit(sz, i, p + j), 1, "b" + idx2(i, j)});
  const bool quotient = m == n;
  std::string name = (quotient ? "psl(" : "sl(") + std::to_string(m) + "," + std::to_string(n) + ")";
  return assemble(name, p, q, quotient, c);
}

MatrixModel osp_model(std::size_t n) {
  if (n == 0) throw std::invalid_argument("osp_model: n must be positive");
  const std::size_t p = 2, q = 2 * n, sz = p + q;
  const Matrix j = standard_j(q);
  Matrix g(2, 2);
  g(0, 1) = g(1, 0) = 1;
  auto odd = [&](std::size_t row, std::size_t col) {
    Matrix x(2, q);
    x(row, col) = 1;
    Matrix m(sz, sz);
    m.set_block(0, p, x);
    m.set_block(p, 0, j * x.transpose() * g);
    return m;
  };
  std::vector<Candidate> c;
  for (std::size_t i = 0; i < q; ++i) c.push_back({odd(1, i), -1, "x" + std::to_string(i)});
  Matrix alpha(sz, sz);
  alpha(0, 0) = 1;
  alpha(1, 1) = -1;
  c.push_back({alpha, 0, "h"});
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a; b < q; ++b) {
      Matrix s(q, q);
      s(a, b) = s(b, a) = 1;
      Matrix m(sz, sz);
      m.set_block(p, p, j * s);
      c.push_back({m, 0, "S" + idx2(a, b)});
    }
  for (std::size_t i = 0; i < q; ++i) c.push_back({odd(0, i), 1, "y" + std::to_string(i)});
  return assemble("osp(2," + std::to_string(q) + ")", p, q, false, c);
}

Matrix standard_j(std::size_t two_r) {
  if (two_r % 2) throw std::invalid_argument("standard_j: size must be even");
  const std::size_t r = two_r / 2;
  Matrix j(two_r, two_r);
  for (std::size_t i = 0; i < r; ++i) {
    j(i, r + i) = 1;
    j(r + i, i) = -1;
  }
  return j;
}

Matrix symplectic_transpose(const Matrix& x) {
  Matrix jq = standard_j(x.cols()), jp = standard_j(x.rows());
  return jq * x.transpose() * (-jp);  // J^{-1} = -J
}

Matrix apply_sigma1(const Matrix& x, std::size_t p, std::size_t q) {
  return apply_blockwise(x, p, q, plain_transpose);
}

Matrix apply_sigma2(const Matrix& x, std::size_t p, std::size_t q) {
  if (p % 2 || q % 2) throw std::invalid_argument("sigma2: block sizes must be even");
  return apply_blockwise(x, p, q, symplectic_transpose);
}

GradedConjugation conjugation_from_map(const MatrixModel& model, const std::function<Matrix(const Matrix&)>& f) {
  const std::size_t n = model.basis.size();
  if (model.modulo_identity) {
    Vector c = model.coords(f(Matrix::identity(model.p + model.q)));
    if (!is_zero(c)) throw std::invalid_argument(model.name + ": map does not preserve the center");
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = model.coords(f(model.basis[i]));
    for (std::size_t r = 0; r < n; ++r) m(r, i) = v[r];
  }
  return {m};
}

GradedConjugation sigma1(const MatrixModel& model) {
  return conjugation_from_map(model, [&](const Matrix& x) { return apply_sigma1(x, model.p, model.q); });
}

GradedConjugation sigma2(const MatrixModel& model) {
  return conjugation_from_map(model, [&](const Matrix& x) { return apply_sigma2(x, model.p, model.q); });
}

GradedConjugation sigma_osp(const MatrixModel& model) { return sigma1(model); }

bool check_sigma1_square(const MatrixModel& model) {
  const std::size_t sz = model.p + model.q;
  Matrix pm = Matrix::identity(sz);
  for (std::size_t i = model.p; i < sz; ++i) pm(i, i) = -1;
  for (const auto& x : model.basis) {
    Matrix lhs = apply_sigma1(apply_sigma1(x, model.p, model.q), model.p, model.q);
    Matrix rhs = pm * x * pm;
    if (model.modulo_identity ? model.coords(lhs) != model.coords(rhs) : lhs != rhs) return false;
  }
  return true;
}

}  // namespace trialg
