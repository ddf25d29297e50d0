#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trialg/exactcore/matrix.hpp"

namespace trialg {

/// Named even and odd generators. At most 64 odd generators.
struct Universe {
  std::vector<std::string> even;
  std::vector<std::string> odd;

  [[nodiscard]] std::optional<std::size_t> even_index(const std::string& name) const;
  [[nodiscard]] std::optional<std::size_t> odd_index(const std::string& name) const;
  friend bool operator==(const Universe&, const Universe&) = default;
};
using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> even, std::vector<std::string> odd = {});

/// Even exponents plus a bitmask of odd generators, stored in ascending order.
struct Monomial {
  std::vector<std::uint32_t> exps;
  std::uint64_t odd = 0;

  [[nodiscard]] unsigned degree() const;
  [[nodiscard]] int parity() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sign of the product xi_A * xi_B after sorting, or 0 when A and B overlap.
int odd_product_sign(std::uint64_t a, std::uint64_t b);

/// Row a of `even` (resp. `odd`) is the image of even (resp. odd) generator a.
struct LinearChange {
  Matrix even;
  Matrix odd;

  static LinearChange identity(const Universe& u);
  [[nodiscard]] LinearChange compose(const LinearChange& inner) const;
  [[nodiscard]] bool is_involution() const;
};

class SuperPoly {
 public:
  SuperPoly() = default;
  explicit SuperPoly(UniversePtr u) : u_(std::move(u)) {}

  static SuperPoly constant(UniversePtr u, const Rational& c);
  static SuperPoly term(UniversePtr u, Monomial m, const Rational& c = 1);
  /// Generator by name, even or odd.
  static SuperPoly var(UniversePtr u, const std::string& name);
  static SuperPoly even_var(UniversePtr u, std::size_t i);
  static SuperPoly odd_var(UniversePtr u, std::size_t i);

  [[nodiscard]] const UniversePtr& universe() const { return u_; }
  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;
  /// 0 or 1 for homogeneous polynomials (zero counts as even), nullopt otherwise.
  [[nodiscard]] std::optional<int> parity() const;
  [[nodiscard]] int degree() const;  // -1 for zero
  [[nodiscard]] std::string str() const;

  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const Rational& s);
  void add_term(const Monomial& m, const Rational& c);

  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator-(SuperPoly a) { return a *= Rational(-1); }
  friend SuperPoly operator*(const Rational& s, SuperPoly a) { return a *= s; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  friend bool operator==(const SuperPoly& a, const SuperPoly& b);

  [[nodiscard]] SuperPoly derive_even(std::size_t i) const;
  /// Left derivative: sign (-1)^(number of odd generators before xi_i).
  [[nodiscard]] SuperPoly derive_odd(std::size_t i) const;
  [[nodiscard]] SuperPoly derive(const std::string& name) const;
  [[nodiscard]] SuperPoly substitute(const LinearChange& c) const;

 private:
  void check_same(const SuperPoly& o) const;

  UniversePtr u_;
  std::map<Monomial, Rational> terms_;
};

inline SuperPoly mul(const SuperPoly& a, const SuperPoly& b) { return a * b; }

/// All monomials of total degree <= cap, ordered by degree then lexicographically.
std::vector<Monomial> monomials_up_to(const Universe& u, unsigned cap);

}  // namespace trialg
