#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "trialg/exactcore/rational.hpp"

namespace trialg {

using Vector = std::vector<Rational>;

Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);
Rational dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_flat(std::size_t rows, std::size_t cols, const Vector& flat);
  /// Parses "a,b;c,d" (rows separated by ';').
  static Matrix parse(const std::string& text);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Vector row(std::size_t i) const;
  [[nodiscard]] Vector col(std::size_t j) const;
  [[nodiscard]] const Vector& flat() const { return data_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  [[nodiscard]] Vector apply(const Vector& v) const;
  [[nodiscard]] Rational trace() const;
  [[nodiscard]] Rational determinant() const;
  [[nodiscard]] std::optional<Matrix> inverse() const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_skew() const;
  [[nodiscard]] std::string str() const;
  /// Compact form accepted by parse(), e.g. "1,0;0,1".
  [[nodiscard]] std::string literal() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// XY - YX
Matrix commutator(const Matrix& x, const Matrix& y);

}  // namespace trialg
