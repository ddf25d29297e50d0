#include "trialg/superpoly/superpoly.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace trialg {

std::optional<std::size_t> Universe::even_index(const std::string& name) const {
  auto it = std::find(even.begin(), even.end(), name);
  if (it == even.end()) return std::nullopt;
  return static_cast<std::size_t>(it - even.begin());
}

std::optional<std::size_t> Universe::odd_index(const std::string& name) const {
  auto it = std::find(odd.begin(), odd.end(), name);
  if (it == odd.end()) return std::nullopt;
  return static_cast<std::size_t>(it - odd.begin());
}

UniversePtr make_universe(std::vector<std::string> even, std::vector<std::string> odd) {
  if (odd.size() > 64) throw std::invalid_argument("at most 64 odd generators");
  return std::make_shared<const Universe>(Universe{std::move(even), std::move(odd)});
}

unsigned Monomial::degree() const {
  unsigned d = static_cast<unsigned>(std::popcount(odd));
  for (auto e : exps) d += e;
  return d;
}

int Monomial::parity() const { return std::popcount(odd) & 1; }

int odd_product_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int swaps = 0;
  for (std::uint64_t rest = b; rest; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    const std::uint64_t above = bit == 63 ? 0 : ~((std::uint64_t{1} << (bit + 1)) - 1);
    swaps += std::popcount(a & above);
  }
  return (swaps & 1) ? -1 : 1;
}

LinearChange LinearChange::identity(const Universe& u) {
  return {Matrix::identity(u.even.size()), Matrix::identity(u.odd.size())};
}

LinearChange LinearChange::compose(const LinearChange& inner) const {
  // (this o inner)(x_a) = this(sum_b inner(a,b) x_b) = sum_b inner(a,b) sum_c this(b,c) x_c
  return {inner.even * even, inner.odd * odd};
}

bool LinearChange::is_involution() const {
  LinearChange sq = compose(*this);
  return sq.even == Matrix::identity(even.rows()) && sq.odd == Matrix::identity(odd.rows());
}

SuperPoly SuperPoly::constant(UniversePtr u, const Rational& c) {
  Monomial m;
  m.exps.assign(u->even.size(), 0);
  return term(std::move(u), std::move(m), c);
}

SuperPoly SuperPoly::term(UniversePtr u, Monomial m, const Rational& c) {
  if (m.exps.size() != u->even.size()) throw std::invalid_argument("monomial/universe mismatch");
  SuperPoly p(std::move(u));
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

SuperPoly SuperPoly::even_var(UniversePtr u, std::size_t i) {
  Monomial m;
  m.exps.assign(u->even.size(), 0);
  m.exps.at(i) = 1;
  return term(std::move(u), std::move(m));
}

SuperPoly SuperPoly::odd_var(UniversePtr u, std::size_t i) {
  if (i >= u->odd.size()) throw std::out_of_range("odd generator index");
  Monomial m;
  m.exps.assign(u->even.size(), 0);
  m.odd = std::uint64_t{1} << i;
  return term(std::move(u), std::move(m));
}

SuperPoly SuperPoly::var(UniversePtr u, const std::string& name) {
  if (auto i = u->even_index(name)) return even_var(std::move(u), *i);
  if (auto i = u->odd_index(name)) return odd_var(std::move(u), *i);
  throw std::invalid_argument("unknown variable '" + name + "'");
}

void SuperPoly::check_same(const SuperPoly& o) const {
  if (u_ && o.u_ && u_ != o.u_ && *u_ != *o.u_)
    throw std::invalid_argument("SuperPoly: variable universe mismatch");
}

Rational SuperPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

std::optional<int> SuperPoly::parity() const {
  if (terms_.empty()) return 0;
  const int p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return std::nullopt;
  return p;
}

int SuperPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

std::string SuperPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (!m.exps[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += u_->even[i];
      if (m.exps[i] > 1) mono += "^" + std::to_string(m.exps[i]);
    }
    for (std::size_t i = 0; i < 64; ++i) {
      if (!(m.odd >> i & 1)) continue;
      if (!mono.empty()) mono += "*";
      mono += u_->odd[i];
    }
    Rational a = c.abs();
    std::string coef = a.str();
    if (!first) s += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) s += "-";
    if (mono.empty()) s += coef;
    else if (a.is_one()) s += mono;
    else s += coef + "*" + mono;
    first = false;
  }
  return s;
}

void SuperPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  check_same(o);
  if (!u_) u_ = o.u_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  check_same(o);
  if (!u_) u_ = o.u_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  a.check_same(b);
  SuperPoly r(a.u_ ? a.u_ : b.u_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      const int s = odd_product_sign(ma.odd, mb.odd);
      if (!s) continue;
      Monomial m;
      m.exps.resize(ma.exps.size());
      for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = ma.exps[i] + mb.exps[i];
      m.odd = ma.odd | mb.odd;
      Rational c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(m, c);
    }
  return r;
}

bool operator==(const SuperPoly& a, const SuperPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  a.check_same(b);
  return a.terms_ == b.terms_;
}

SuperPoly SuperPoly::derive_even(std::size_t i) const {
  if (u_ && i >= u_->even.size()) throw std::out_of_range("even generator index");
  SuperPoly r(u_);
  for (const auto& [m, c] : terms_) {
    if (!m.exps[i]) continue;
    Monomial d = m;
    --d.exps[i];
    r.add_term(d, c * Rational(m.exps[i]));
  }
  return r;
}

SuperPoly SuperPoly::derive_odd(std::size_t i) const {
  if (u_ && i >= u_->odd.size()) throw std::out_of_range("odd generator index");
  const std::uint64_t bit = std::uint64_t{1} << i;
  SuperPoly r(u_);
  for (const auto& [m, c] : terms_) {
    if (!(m.odd & bit)) continue;
    Monomial d = m;
    d.odd &= ~bit;
    const bool neg = std::popcount(m.odd & (bit - 1)) & 1;
    r.add_term(d, neg ? -c : c);
  }
  return r;
}

SuperPoly SuperPoly::derive(const std::string& name) const {
  if (!u_) throw std::invalid_argument("derive on a polynomial without universe");
  if (auto i = u_->even_index(name)) return derive_even(*i);
  if (auto i = u_->odd_index(name)) return derive_odd(*i);
  throw std::invalid_argument("unknown variable '" + name + "'");
}

SuperPoly SuperPoly::substitute(const LinearChange& c) const {
  if (!u_) return *this;
  const std::size_t ne = u_->even.size(), no = u_->odd.size();
  if (c.even.rows() != ne || c.even.cols() != ne || c.odd.rows() != no || c.odd.cols() != no)
    throw std::invalid_argument("LinearChange does not match the universe");
  std::vector<SuperPoly> even_img(ne), odd_img(no);
  for (std::size_t a = 0; a < ne; ++a) {
    even_img[a] = SuperPoly(u_);
    for (std::size_t b = 0; b < ne; ++b)
      if (!c.even(a, b).is_zero()) even_img[a] += c.even(a, b) * even_var(u_, b);
  }
  for (std::size_t a = 0; a < no; ++a) {
    odd_img[a] = SuperPoly(u_);
    for (std::size_t b = 0; b < no; ++b)
      if (!c.odd(a, b).is_zero()) odd_img[a] += c.odd(a, b) * odd_var(u_, b);
  }
  SuperPoly r(u_);
  for (const auto& [m, coef] : terms_) {
    SuperPoly t = constant(u_, coef);
    for (std::size_t a = 0; a < ne; ++a)
      for (std::uint32_t e = 0; e < m.exps[a]; ++e) t = t * even_img[a];
    for (std::size_t a = 0; a < no; ++a)
      if (m.odd >> a & 1) t = t * odd_img[a];
    r += t;
  }
  return r;
}

std::vector<Monomial> monomials_up_to(const Universe& u, unsigned cap) {
  std::vector<Monomial> out;
  const std::size_t ne = u.even.size(), no = u.odd.size();
  Monomial cur;
  cur.exps.assign(ne, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == ne) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << no); ++mask) {
        if (static_cast<unsigned>(std::popcount(mask)) > left) continue;
        cur.odd = mask;
        out.push_back(cur);
      }
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.exps[i] = e;
      rec(i + 1, left - e);
    }
    cur.exps[i] = 0;
  };
  rec(0, cap);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a > b;
  });
  return out;
}

}  // namespace trialg
