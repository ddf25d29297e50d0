#include "trialg/exactcore/linalg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace trialg {

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.form;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Rational s = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= s;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: rows != |b|");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.form(i, a.cols());
  return x;
}

std::vector<Vector> nullspace(const Matrix& a) {
  RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational c = v[pivots_[i]];
    if (!c.is_zero()) axpy(v, -c, rows_[i]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return trialg::is_zero(reduce(v)); }

bool Subspace::insert(const Vector& v) {
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return !x.is_zero(); });
  if (it == r.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - r.begin());
  Rational s = r[p].inverse();
  for (auto& x : r) x *= s;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::vector<Vector> Subspace::basis() const {
  if (rows_.empty()) return {};
  RrefResult r = rref(Matrix::from_rows(rows_, ambient_));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.form.row(i));
  return out;
}

Matrix Subspace::basis_matrix() const {
  auto b = basis();
  return Matrix::from_rows(b, ambient_);
}

bool Subspace::contains_all(const Subspace& other) const {
  for (const auto& v : other.rows_)
    if (!contains(v)) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains_all(b);
}

Subspace subspace_close(std::size_t ambient_dim, const std::vector<Vector>& seeds,
                        const std::vector<Matrix>& operators) {
  for (const auto& op : operators)
    if (op.rows() != ambient_dim || op.cols() != ambient_dim)
      throw std::invalid_argument("subspace_close: operator shape mismatch");
  Subspace s(ambient_dim);
  std::deque<Vector> work;
  for (const auto& v : seeds)
    if (s.insert(v)) work.push_back(v);
  while (!work.empty() && !s.is_full()) {
    Vector v = std::move(work.front());
    work.pop_front();
    for (const auto& op : operators) {
      Vector w = op.apply(v);
      if (s.insert(w)) work.push_back(std::move(w));
    }
  }
  return s;
}

Vector SpanSolver::strip(Vector& v, Vector& combo) const {
  for (const auto& row : rows_) {
    const Rational c = v[row.pivot];
    if (c.is_zero()) continue;
    axpy(v, -c, row.v);
    combo.resize(std::max(combo.size(), row.combo.size()));
    for (std::size_t i = 0; i < row.combo.size(); ++i)
      if (!row.combo[i].is_zero()) combo[i].add_mul(c, row.combo[i]);
  }
  return v;
}

void SpanSolver::add_modulo(const Vector& v) {
  if (!basis_.empty()) throw std::logic_error("SpanSolver: modulo vectors must come first");
  Vector r(v), combo;
  strip(r, combo);
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return !x.is_zero(); });
  if (it == r.end()) return;
  const std::size_t p = static_cast<std::size_t>(it - r.begin());
  Rational s = r[p].inverse();
  for (auto& x : r) x *= s;
  rows_.push_back({std::move(r), p, {}});
}

std::optional<std::size_t> SpanSolver::add(const Vector& v) {
  if (v.size() != ambient_) throw std::invalid_argument("SpanSolver: dimension mismatch");
  Vector r(v), combo;
  strip(r, combo);
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return !x.is_zero(); });
  if (it == r.end()) return std::nullopt;
  const std::size_t idx = basis_.size();
  basis_.push_back(v);
  // r = v - sum combo_i b_i, so r / r[p] = (b_idx - sum combo_i b_i) / r[p].
  const std::size_t p = static_cast<std::size_t>(it - r.begin());
  Rational s = r[p].inverse();
  for (auto& x : r) x *= s;
  Vector c(idx + 1);
  for (std::size_t i = 0; i < combo.size(); ++i) c[i] = -combo[i] * s;
  c[idx] = s;
  rows_.push_back({std::move(r), p, std::move(c)});
  return idx;
}

std::optional<Vector> SpanSolver::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("SpanSolver: dimension mismatch");
  Vector r(v), combo;
  strip(r, combo);
  if (!trialg::is_zero(r)) return std::nullopt;
  combo.resize(basis_.size());
  return combo;
}

Congruence diagonalize_symmetric(const Matrix& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("diagonalize_symmetric: not symmetric");
  const std::size_t n = s.rows();
  Matrix a(s);
  Matrix p = Matrix::identity(n);
  // Column operations on p mirror the congruence a <- E^T a E.
  auto add_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t i = 0; i < n; ++i) {
      p(i, dst) += f * p(i, src);
      a(i, dst) += f * a(i, src);
    }
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
  };
  for (std::size_t c = 0; c < n; ++c) {
    if (a(c, c).is_zero()) {
      std::size_t j = c + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        for (std::size_t i = 0; i < n; ++i) {
          std::swap(p(i, c), p(i, j));
          std::swap(a(i, c), a(i, j));
        }
        for (std::size_t i = 0; i < n; ++i) std::swap(a(c, i), a(j, i));
      } else {
        j = c + 1;
        while (j < n && a(c, j).is_zero()) ++j;
        if (j == n) continue;
        add_col(c, j, 1);
      }
    }
    Rational inv = a(c, c).inverse();
    for (std::size_t j = c + 1; j < n; ++j)
      if (!a(c, j).is_zero()) add_col(j, c, -a(c, j) * inv);
  }
  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return {p, d};
}

}  // namespace trialg
