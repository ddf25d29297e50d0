#include "trialg/trisys/sparse_vec.hpp"

#include <algorithm>

namespace trialg {

SparseVec SparseVec::from_dense(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.entries.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

SparseVec SparseVec::unit(std::uint32_t id, const Rational& c) {
  SparseVec s;
  if (!c.is_zero()) s.entries.emplace_back(id, c);
  return s;
}

Vector SparseVec::to_dense(std::size_t n) const {
  Vector v(n);
  for (const auto& [i, c] : entries) v.at(i) = c;
  return v;
}

Rational SparseVec::at(std::uint32_t id) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), id,
                             [](const auto& e, std::uint32_t k) { return e.first < k; });
  return it != entries.end() && it->first == id ? it->second : Rational();
}

std::string SparseVec::str(const std::function<std::string(std::uint32_t)>& label) const {
  if (entries.empty()) return "0";
  std::string s;
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const auto& [i, c] = entries[n];
    if (n) s += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) s += "-";
    Rational a = c.abs();
    if (!a.is_one()) s += a.str() + "*";
    s += label(i);
  }
  return s;
}

void Accumulator::touch(std::uint32_t id) {
  if (id >= vals_.size()) {
    vals_.resize(id + 1 + id / 2);
    mark_.resize(vals_.size(), 0);
  }
  if (!mark_[id]) {
    mark_[id] = 1;
    touched_.push_back(id);
  }
}

void Accumulator::add(std::uint32_t id, const Rational& c) {
  if (c.is_zero()) return;
  touch(id);
  vals_[id] += c;
}

void Accumulator::add_scaled(const SparseVec& v, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v.entries) {
    touch(i);
    vals_[i].add_mul(c, x);
  }
}

void Accumulator::sub_scaled(const SparseVec& v, const Rational& c) {
  if (c.is_zero()) return;
  const Rational m = -c;
  add_scaled(v, m);
}

bool Accumulator::is_zero() const {
  for (auto i : touched_)
    if (!vals_[i].is_zero()) return false;
  return true;
}

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec s;
  for (auto i : touched_) {
    if (!vals_[i].is_zero()) s.entries.emplace_back(i, vals_[i]);
    vals_[i] = Rational();
    mark_[i] = 0;
  }
  touched_.clear();
  return s;
}

void Accumulator::clear() {
  for (auto i : touched_) {
    vals_[i] = Rational();
    mark_[i] = 0;
  }
  touched_.clear();
}

}  // namespace trialg
