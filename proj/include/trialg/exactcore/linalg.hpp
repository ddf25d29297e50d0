#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trialg/exactcore/matrix.hpp"

namespace trialg {

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some x with a x = b, free variables set to zero; nullopt if inconsistent.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Basis of {x : a x = 0}, one vector per free column in increasing order.
std::vector<Vector> nullspace(const Matrix& a);

/// A subspace of F^n kept as an echelon basis. Membership is exact.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return rows_.size(); }
  [[nodiscard]] bool is_zero() const { return rows_.empty(); }
  [[nodiscard]] bool is_full() const { return rows_.size() == ambient_; }

  /// v minus its projection along the stored echelon rows.
  [[nodiscard]] Vector reduce(Vector v) const;
  [[nodiscard]] bool contains(const Vector& v) const;
  /// Adds v; returns false when v was already in the span.
  bool insert(const Vector& v);

  /// Basis in reduced row-echelon form.
  [[nodiscard]] std::vector<Vector> basis() const;
  [[nodiscard]] Matrix basis_matrix() const;
  [[nodiscard]] bool contains_all(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the seeds and stable under every operator.
Subspace subspace_close(std::size_t ambient_dim, const std::vector<Vector>& seeds,
                        const std::vector<Matrix>& operators);

/// Incremental basis extraction with coordinates.
///
/// Vectors passed to add_modulo span a subspace W that is quotiented out:
/// coordinates() expresses v modulo W in terms of the generators accepted by add().
class SpanSolver {
 public:
  explicit SpanSolver(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  void add_modulo(const Vector& v);
  /// Index of the new basis element, or nullopt if v is dependent (mod W).
  std::optional<std::size_t> add(const Vector& v);

  [[nodiscard]] std::size_t size() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
  [[nodiscard]] std::optional<Vector> coordinates(const Vector& v) const;

 private:
  struct Row {
    Vector v;
    std::size_t pivot;
    Vector combo;  // v = sum combo[i] basis_[i]  (mod W)
  };
  Vector strip(Vector& v, Vector& combo) const;

  std::size_t ambient_;
  std::vector<Row> rows_;
  std::vector<Vector> basis_;
};

/// Congruence diagonalization of a symmetric matrix: returns P invertible
/// and d with P^T S P = diag(d).
struct Congruence {
  Matrix p;
  Vector diagonal;
};
Congruence diagonalize_symmetric(const Matrix& s);

}  // namespace trialg
