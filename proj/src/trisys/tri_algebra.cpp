#include "trialg/trisys/tri_algebra.hpp"

#include <stdexcept>

namespace trialg {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back("e" + std::to_string(i + 1));
  return l;
}

class TableSession final : public BracketSession {
 public:
  explicit TableSession(const TriAlgebra& t) : t_(t), n_(static_cast<std::uint32_t>(t.dim())) {}
  std::uint32_t test_size() const override { return n_; }
  const SparseVec& bracket(std::uint32_t i, std::uint32_t j, std::uint32_t k) override {
    return t_.at(i, j, k);
  }
  std::string label(std::uint32_t id) override { return t_.basis_labels().at(id); }

 private:
  const TriAlgebra& t_;
  std::uint32_t n_;
};

}  // namespace

TriAlgebra::TriAlgebra(std::string name, std::vector<std::string> basis_labels)
    : name_(std::move(name)), labels_(std::move(basis_labels)) {
  const std::size_t n = labels_.size();
  table_.resize(n * n * n);
}

TriAlgebra::TriAlgebra(std::string name, std::size_t dim)
    : TriAlgebra(std::move(name), default_labels(dim)) {}

std::unique_ptr<BracketSession> TriAlgebra::open_session(unsigned) const {
  return std::make_unique<TableSession>(*this);
}

std::size_t TriAlgebra::slot(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t n = dim();
  if (i >= n || j >= n || k >= n) throw std::out_of_range("TriAlgebra: basis index out of range");
  return (i * n + j) * n + k;
}

const SparseVec& TriAlgebra::at(std::size_t i, std::size_t j, std::size_t k) const {
  return table_[slot(i, j, k)];
}

void TriAlgebra::set(std::size_t i, std::size_t j, std::size_t k, SparseVec v) {
  for (const auto& [id, c] : v.entries)
    if (id >= dim()) throw std::out_of_range("TriAlgebra: bracket value outside the space");
  table_[slot(i, j, k)] = std::move(v);
}

void TriAlgebra::set(std::size_t i, std::size_t j, std::size_t k, const Vector& v) {
  if (v.size() != dim()) throw std::invalid_argument("TriAlgebra: value has wrong dimension");
  table_[slot(i, j, k)] = SparseVec::from_dense(v);
}

Vector TriAlgebra::bracket(const Vector& x, const Vector& y, const Vector& z) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n || z.size() != n)
    throw std::invalid_argument("TriAlgebra::bracket: dimension mismatch");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        const SparseVec& v = table_[(i * n + j) * n + k];
        if (v.is_zero()) continue;
        Rational s = xy * z[k];
        for (const auto& [id, c] : v.entries) r[id].add_mul(s, c);
      }
    }
  }
  return r;
}

Matrix TriAlgebra::left_op(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector col = bracket(x, y, unit_vector(n, k));
    for (std::size_t r = 0; r < n; ++r) m(r, k) = col[r];
  }
  return m;
}

Matrix TriAlgebra::left_op(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [id, c] : at(i, j, k).entries) m(id, k) = c;
  return m;
}

bool TriAlgebra::is_zero_bracket() const {
  for (const auto& v : table_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix left_op(const TriAlgebra& t, const Vector& x, const Vector& y) { return t.left_op(x, y); }

TriAlgebra change_basis(const TriAlgebra& t, const Matrix& p) {
  const std::size_t n = t.dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("change_basis: shape mismatch");
  auto inv = p.inverse();
  if (!inv) throw std::invalid_argument("change_basis: matrix not invertible");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(p.col(i));
  return tabulate(t.name(), t.basis_labels(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return inv->apply(t.bracket(cols[i], cols[j], cols[k]));
  });
}

TriAlgebra direct_sum(const TriAlgebra& a, const TriAlgebra& b) {
  std::vector<std::string> labels;
  for (const auto& l : a.basis_labels()) labels.push_back(l + "'1");
  for (const auto& l : b.basis_labels()) labels.push_back(l + "'2");
  TriAlgebra s(a.name() + "+" + b.name(), std::move(labels));
  const std::size_t na = a.dim(), nb = b.dim();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) s.set(i, j, k, a.at(i, j, k));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) {
        SparseVec v = b.at(i, j, k);
        for (auto& e : v.entries) e.first += static_cast<std::uint32_t>(na);
        s.set(na + i, na + j, na + k, std::move(v));
      }
  return s;
}

}  // namespace trialg
