#pragma once

#include <string>
#include <vector>

#include "trialg/exactcore/matrix.hpp"
#include "trialg/trisys/tri_system.hpp"

namespace trialg {

/// Finite-dimensional 3-algebra given by its structure tensor.
class TriAlgebra : public TriSystem {
 public:
  TriAlgebra() = default;
  TriAlgebra(std::string name, std::vector<std::string> basis_labels);
  TriAlgebra(std::string name, std::size_t dim);

  [[nodiscard]] std::string name() const override { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  [[nodiscard]] bool is_finite() const override { return true; }
  [[nodiscard]] std::unique_ptr<BracketSession> open_session(unsigned degree_cap) const override;

  [[nodiscard]] std::size_t dim() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& basis_labels() const { return labels_; }

  [[nodiscard]] const SparseVec& at(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, SparseVec v);
  void set(std::size_t i, std::size_t j, std::size_t k, const Vector& v);

  [[nodiscard]] Vector bracket(const Vector& x, const Vector& y, const Vector& z) const;
  /// Matrix of z -> [x, y, z].
  [[nodiscard]] Matrix left_op(const Vector& x, const Vector& y) const;
  [[nodiscard]] Matrix left_op(std::size_t i, std::size_t j) const;
  [[nodiscard]] bool is_zero_bracket() const;

  /// Tensor equality (names and labels are ignored).
  friend bool operator==(const TriAlgebra& a, const TriAlgebra& b) { return a.table_ == b.table_; }

 private:
  [[nodiscard]] std::size_t slot(std::size_t i, std::size_t j, std::size_t k) const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

Matrix left_op(const TriAlgebra& t, const Vector& x, const Vector& y);

/// The same bracket expressed in the basis given by the columns of p:
/// new_e_i = sum_a p(a, i) old_e_a.
TriAlgebra change_basis(const TriAlgebra& t, const Matrix& p);

TriAlgebra direct_sum(const TriAlgebra& a, const TriAlgebra& b);

/// Builds a tensor by evaluating a bracket on basis vectors.
template <class F>
TriAlgebra tabulate(std::string name, std::vector<std::string> labels, F&& bracket) {
  TriAlgebra t(std::move(name), std::move(labels));
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.set(i, j, k, bracket(i, j, k));
  return t;
}

}  // namespace trialg
