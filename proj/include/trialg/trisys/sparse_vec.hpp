#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "trialg/exactcore/matrix.hpp"

namespace trialg {

/// Sorted (id, coefficient) pairs without zeros.
struct SparseVec {
  std::vector<std::pair<std::uint32_t, Rational>> entries;

  static SparseVec from_dense(const Vector& v);
  static SparseVec unit(std::uint32_t id, const Rational& c = 1);
  [[nodiscard]] Vector to_dense(std::size_t n) const;
  [[nodiscard]] bool is_zero() const { return entries.empty(); }
  [[nodiscard]] Rational at(std::uint32_t id) const;
  [[nodiscard]] std::string str(const std::function<std::string(std::uint32_t)>& label) const;
  friend bool operator==(const SparseVec&, const SparseVec&) = default;
};

/// Dense scratch vector that remembers which slots were touched.
class Accumulator {
 public:
  void add(std::uint32_t id, const Rational& c);
  void add_scaled(const SparseVec& v, const Rational& c);
  void sub_scaled(const SparseVec& v, const Rational& c);
  [[nodiscard]] bool is_zero() const;
  /// Returns the sorted sparse result and resets the accumulator.
  SparseVec take();
  void clear();

 private:
  void touch(std::uint32_t id);

  std::vector<Rational> vals_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace trialg
