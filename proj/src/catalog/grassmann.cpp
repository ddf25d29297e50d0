#include "trialg/catalog/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace trialg {

namespace {

UniversePtr grassmann_universe(unsigned n) {
  std::vector<std::string> odd;
  for (unsigned i = 0; i < n; ++i) odd.push_back("xi" + std::to_string(i + 1));
  return make_universe({}, odd);
}

std::string monomial_label(const Monomial& m, unsigned n) {
  if (!m.odd) return "1";
  std::string s;
  for (unsigned i = 0; i < n; ++i)
    if (m.odd >> i & 1) s += "xi" + std::to_string(i + 1);
  return s;
}

SuperPoly plain_bracket(const SuperPoly& a, const SuperPoly& b, unsigned n) {
  SuperPoly r(a.universe());
  for (unsigned i = 0; i < n; ++i) r += a.derive_odd(i) * b.derive_odd(i);
  return r;
}

using IndexMap = std::unordered_map<std::uint64_t, std::size_t>;

IndexMap index_map(const std::vector<Monomial>& basis) {
  IndexMap m;
  for (std::size_t i = 0; i < basis.size(); ++i) m.emplace(basis[i].odd, i);
  return m;
}

Vector coords_in(const SuperPoly& p, const IndexMap& index, std::size_t dim) {
  Vector v(dim);
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m.odd);
    if (it == index.end()) throw std::logic_error("grassmann: value outside the basis");
    v[it->second] = c;
  }
  return v;
}

}  // namespace

std::vector<Monomial> grassmann_monomials(unsigned n, bool odd_only) {
  if (n > 20) throw std::invalid_argument("grassmann: too many generators");
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (!odd_only || std::popcount(m) % 2) masks.push_back(m);
  // Lexicographic on the sorted index sets, within each size.
  auto lex_key = [n](std::uint64_t m) {
    std::vector<unsigned> idx;
    for (unsigned i = 0; i < n; ++i)
      if (m >> i & 1) idx.push_back(i);
    return idx;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
    const int da = std::popcount(a), db = std::popcount(b);
    if (da != db) return da < db;
    return lex_key(a) < lex_key(b);
  });
  std::vector<Monomial> out;
  for (auto m : masks) out.push_back(Monomial{{}, m});
  return out;
}

GrassmannN5 grassmann_n5(unsigned k) {
  if (k == 0) throw std::invalid_argument("grassmann_n5: k must be positive");
  const unsigned n = 2 * k;
  GrassmannN5 out;
  out.universe = grassmann_universe(n);
  out.basis = grassmann_monomials(n, true);
  const std::size_t d = out.basis.size();
  std::vector<SuperPoly> e;
  std::vector<std::string> labels;
  for (const auto& m : out.basis) {
    e.push_back(SuperPoly::term(out.universe, m));
    labels.push_back(monomial_label(m, n));
  }
  const IndexMap index = index_map(out.basis);
  TriAlgebra t("GrassmannN5(" + std::to_string(k) + ")", labels);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      SuperPoly ab = plain_bracket(e[a], e[b], n);
      if (ab.is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c) {
        t.set(a, b, c, coords_in(plain_bracket(ab, e[c], n), index, d));
      }
    }
  out.algebra = std::move(t);
  const Monomial top{{}, (std::uint64_t{1} << n) - 1};
  Matrix form(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) form(a, b) = (e[a] * e[b]).coefficient(top);
  out.form = {form};
  return out;
}

SuperAlgebra grassmann_poisson_superalgebra(unsigned k) {
  if (k == 0) throw std::invalid_argument("grassmann_poisson_superalgebra: k must be positive");
  const unsigned n = 2 * k;
  auto u = grassmann_universe(n);
  const auto basis = grassmann_monomials(n, false);
  std::vector<std::string> labels;
  std::vector<int> parity;
  std::vector<SuperPoly> e;
  const IndexMap index = index_map(basis);
  for (const auto& m : basis) {
    labels.push_back(monomial_label(m, n));
    parity.push_back(m.parity());
    e.push_back(SuperPoly::term(u, m));
  }
  SuperAlgebra g("po(0|" + std::to_string(n) + ")", labels, parity, parity);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      SuperPoly r = plain_bracket(e[a], e[b], n);
      if (!parity[a]) r = -r;
      g.set(a, b, SparseVec::from_dense(coords_in(r, index, basis.size())));
    }
  return g;
}

}  // namespace trialg
