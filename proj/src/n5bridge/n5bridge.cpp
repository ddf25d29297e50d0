#include "trialg/n5bridge/n5bridge.hpp"

#include <stdexcept>

namespace trialg {

Rational BilinearForm::operator()(const Vector& x, const Vector& y) const { return dot(x, matrix.apply(y)); }

TriAlgebra n5_from_superalgebra(const SuperAlgebra& g) {
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.parity(i)) odd.push_back(i);
  const std::size_t n = odd.size(), N = g.dim();
  std::vector<std::string> labels;
  for (auto i : odd) labels.push_back(g.labels()[i]);
  TriAlgebra t(g.name().empty() ? "N5" : "N5 " + g.name(), labels);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector ab = g.at(odd[a], odd[b]).to_dense(N);
      if (is_zero(ab)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        Vector full = g.bracket(ab, unit_vector(N, odd[c]));
        Vector v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = full[odd[r]];
        t.set(a, b, c, v);
      }
    }
  return t;
}

SuperAlgebra reconstruct_g(const TriAlgebra& n5) {
  const std::size_t n = n5.dim();
  SpanSolver span(n * n);
  std::vector<Matrix> even;
  std::vector<std::pair<std::size_t, std::size_t>> gens;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix l = n5.left_op(a, b);
      if (span.add(l.flat())) {
        even.push_back(std::move(l));
        gens.emplace_back(a, b);
      }
    }
  const std::size_t d = even.size();
  std::vector<std::string> labels;
  std::vector<int> degrees, parities;
  const auto& nl = n5.basis_labels();
  for (const auto& [a, b] : gens) labels.push_back("L(" + nl[a] + "," + nl[b] + ")"), degrees.push_back(0),
                                  parities.push_back(0);
  for (std::size_t a = 0; a < n; ++a) labels.push_back(nl[a]), degrees.push_back(1), parities.push_back(1);
  SuperAlgebra g(n5.name().empty() ? "g(N)" : "g(" + n5.name() + ")", labels, degrees, parities);

  auto even_part = [&](const Vector& coords) {
    SparseVec v;
    for (std::size_t r = 0; r < d; ++r)
      if (!coords[r].is_zero()) v.entries.emplace_back(static_cast<std::uint32_t>(r), coords[r]);
    return v;
  };
  auto odd_part = [&](const Vector& x, const Rational& s) {
    SparseVec v;
    for (std::size_t r = 0; r < n; ++r)
      if (!x[r].is_zero()) v.entries.emplace_back(static_cast<std::uint32_t>(d + r), s * x[r]);
    return v;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.set(d + a, d + b, even_part(*span.coordinates(n5.left_op(a, b).flat())));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t a = 0; a < n; ++a) {
      Vector img = even[r].col(a);
      g.set(r, d + a, odd_part(img, Rational(1)));
      g.set(d + a, r, odd_part(img, Rational(-1)));
    }
    for (std::size_t s = 0; s < d; ++s) {
      auto c = span.coordinates(commutator(even[r], even[s]).flat());
      if (!c) throw std::invalid_argument("reconstruct_g: even part is not closed under commutators");
      g.set(r, s, even_part(*c));
    }
  }
  return g;
}

AxiomReport check_invariant_form(const TriAlgebra& n5, const BilinearForm& b, std::size_t max_witnesses) {
  const std::size_t n = n5.dim();
  if (b.matrix.rows() != n || b.matrix.cols() != n) throw std::invalid_argument("check_invariant_form: size mismatch");
  if (!b.matrix.is_skew()) throw std::invalid_argument("check_invariant_form: form is not skew-symmetric");
  AxiomReport rep;
  rep.subject = n5.name();
  const std::string ab = "F(a,b,c,d) = F(b,a,c,d)";
  const std::string cd = "F(a,b,c,d) = F(a,b,d,c)";
  const std::string acbd = "F(a,b,c,d) = F(c,d,a,b)";
  rep.axioms_checked = {ab, cd, acbd};
  rep.scope = "F(a,b,c,d) = ([a,b,c], d) on all basis 4-tuples";
  // f[((a*n+b)*n+c)*n+d]
  std::vector<Rational> f(n * n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bb = 0; bb < n; ++bb)
      for (std::size_t c = 0; c < n; ++c) {
        const SparseVec& v = n5.at(a, bb, c);
        for (std::size_t d = 0; d < n; ++d) {
          Rational s;
          for (const auto& [id, x] : v.entries) s.add_mul(x, b.matrix(id, d));
          f[((a * n + bb) * n + c) * n + d] = s;
        }
      }
  auto at = [&](std::size_t a, std::size_t bb, std::size_t c, std::size_t d) -> const Rational& {
    return f[((a * n + bb) * n + c) * n + d];
  };
  const auto& l = n5.basis_labels();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bb = 0; bb < n; ++bb)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Rational& x = at(a, bb, c, d);
          const std::pair<const std::string*, const Rational*> checks[] = {
              {&ab, &at(bb, a, c, d)}, {&cd, &at(a, bb, d, c)}, {&acbd, &at(c, d, a, bb)}};
          for (const auto& [name, y] : checks) {
            rep.count(*name);
            if (x != *y) rep.add_violation({*name, {l[a], l[bb], l[c], l[d]}, x.str(), y->str()}, max_witnesses);
          }
        }
  return rep;
}

TriAlgebra reduce_n6_to_n5(const TriAlgebra& t) {
  const std::size_t n = t.dim();
  std::vector<std::string> labels = t.basis_labels();
  for (const auto& x : t.basis_labels()) labels.push_back("phi(" + x + ")");
  TriAlgebra out(t.name().empty() ? "N5" : "N5 " + t.name(), labels);

  // sigma(z) = -phi_z, sigma(phi_z) = z must square to -1.
  Matrix sigma(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    sigma(n + i, i) = -1;
    sigma(i, n + i) = 1;
  }
  if (sigma * sigma != -Matrix::identity(2 * n)) throw std::logic_error("reduce_n6_to_n5: sigma^2 != -1");

  // In Lie T: [[x, phi_z], w] = -[x,z,w] and [[x, phi_z], phi_w] = phi_{[z,x,w]}.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t w = 0; w < n; ++w) {
        SparseVec lw;
        for (const auto& [id, c] : t.at(x, z, w).entries) lw.entries.emplace_back(id, -c);
        SparseVec pw;
        for (const auto& [id, c] : t.at(z, x, w).entries) pw.entries.emplace_back(static_cast<std::uint32_t>(n + id), c);
        out.set(x, n + z, w, lw);
        out.set(n + z, x, w, lw);
        out.set(x, n + z, n + w, pw);
        out.set(n + z, x, n + w, pw);
      }
  return out;
}

}  // namespace trialg
