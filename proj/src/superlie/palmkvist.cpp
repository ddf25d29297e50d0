#include "trialg/superlie/palmkvist.hpp"

#include <stdexcept>

namespace trialg {

namespace {

Vector flatten(const L0Element& x) {
  Vector v = x.a.flat();
  const Vector& b = x.b.flat();
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

SparseVec shift(const Vector& coords, std::size_t offset, const Rational& scale = Rational(1)) {
  SparseVec out;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out.entries.emplace_back(static_cast<std::uint32_t>(offset + i), scale * coords[i]);
  return out;
}

}  // namespace

Matrix LieConstruction::sigma_on_l0() const {
  const std::size_t d = l0.size();
  Matrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) m(r, s) = sigma.map(l0_index(r), l0_index(s));
  return m;
}

LieConstruction lie_of(const TriAlgebra& t) {
  const std::size_t n = t.dim();
  LieConstruction out;
  out.n = n;

  // Generators L_{e_i,e_j}: A = [e_i,e_j,.], B = -[e_j,e_i,.].
  std::vector<L0Element> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gens.push_back({t.left_op(i, j), -t.left_op(j, i)});
  SpanSolver span(2 * n * n);
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (span.add(flatten(gens[g]))) {
      out.l0.push_back(gens[g]);
      out.generators.emplace_back(g / n, g % n);
    }
  const std::size_t d = out.l0.size();
  std::vector<Vector> gen_coords;
  for (const auto& g : gens) gen_coords.push_back(*span.coordinates(flatten(g)));

  std::vector<std::string> labels;
  std::vector<int> degrees, parities;
  const auto& tl = t.basis_labels();
  for (std::size_t i = 0; i < n; ++i) labels.push_back(tl[i]), degrees.push_back(-1), parities.push_back(1);
  for (const auto& [i, j] : out.generators)
    labels.push_back("L(" + tl[i] + "," + tl[j] + ")"), degrees.push_back(0), parities.push_back(0);
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back("phi(" + tl[i] + ")"), degrees.push_back(1), parities.push_back(1);
  SuperAlgebra g(t.name().empty() ? "Lie T" : "Lie " + t.name(), labels, degrees, parities);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec v = shift(gen_coords[i * n + j], n, Rational(-1));
      g.set(out.e_index(i), out.phi_index(j), v);
      g.set(out.phi_index(j), out.e_index(i), std::move(v));
    }
  for (std::size_t r = 0; r < d; ++r) {
    const auto& [a, b] = out.l0[r];
    for (std::size_t i = 0; i < n; ++i) {
      Vector ae = a.col(i), be = b.col(i);
      g.set(out.l0_index(r), out.e_index(i), shift(ae, 0));
      g.set(out.e_index(i), out.l0_index(r), shift(ae, 0, Rational(-1)));
      g.set(out.l0_index(r), out.phi_index(i), shift(be, n + d));
      g.set(out.phi_index(i), out.l0_index(r), shift(be, n + d, Rational(-1)));
    }
    for (std::size_t s = 0; s < d; ++s) {
      const auto& y = out.l0[s];
      L0Element c{commutator(a, y.a), commutator(b, y.b)};
      auto coords = span.coordinates(flatten(c));
      if (!coords) throw std::invalid_argument("lie_of: L_0 is not closed under commutators");
      g.set(out.l0_index(r), out.l0_index(s), shift(*coords, n));
    }
  }
  out.algebra = std::move(g);

  // sigma: e -> -phi_e, phi_e -> e, (A, B) -> (B, A).
  const std::size_t total = 2 * n + d;
  Matrix s(total, total);
  for (std::size_t i = 0; i < n; ++i) {
    s(out.phi_index(i), out.e_index(i)) = -1;
    s(out.e_index(i), out.phi_index(i)) = 1;
  }
  for (std::size_t r = 0; r < d; ++r) {
    auto coords = span.coordinates(flatten({out.l0[r].b, out.l0[r].a}));
    if (!coords) throw std::invalid_argument("lie_of: L_0 is not stable under the conjugation");
    for (std::size_t q = 0; q < d; ++q) s(out.l0_index(q), out.l0_index(r)) = (*coords)[q];
  }
  out.sigma.map = std::move(s);
  return out;
}

TriAlgebra bracket_from_conjugation(const SuperAlgebra& g, const GradedConjugation& sigma) {
  if (!check_consistency(g) || !check_shortness(g))
    throw std::invalid_argument("bracket_from_conjugation: grading is not short and consistent");
  if (!verify_conjugation(g, sigma, 1).passed())
    throw std::invalid_argument("bracket_from_conjugation: sigma is not a graded conjugation");
  const auto idx = g.indices_of_degree(-1);
  const std::size_t n = idx.size(), N = g.dim();
  std::vector<std::string> labels;
  for (auto i : idx) labels.push_back(g.labels()[i]);
  TriAlgebra t(g.name(), labels);
  for (std::size_t y = 0; y < n; ++y) {
    Vector sy = sigma.map.col(idx[y]);
    for (std::size_t x = 0; x < n; ++x) {
      Vector xs = g.bracket(unit_vector(N, idx[x]), sy);
      for (std::size_t z = 0; z < n; ++z) {
        Vector full = g.bracket(xs, unit_vector(N, idx[z]));
        Vector v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = full[idx[c]];
        t.set(x, y, z, v);
      }
    }
  }
  return t;
}

Matrix lie_embedding(const LieConstruction& lt, const SuperAlgebra& g, const GradedConjugation& sigma) {
  const auto idx = g.indices_of_degree(-1);
  if (idx.size() != lt.n) throw std::invalid_argument("lie_embedding: L_-1 dimensions differ");
  const std::size_t N = g.dim();
  Matrix m(N, lt.algebra.dim());
  auto put = [&](std::size_t col, const Vector& v) {
    for (std::size_t r = 0; r < N; ++r) m(r, col) = v[r];
  };
  for (std::size_t i = 0; i < lt.n; ++i) {
    put(lt.e_index(i), unit_vector(N, idx[i]));
    put(lt.phi_index(i), -sigma.map.col(idx[i]));
  }
  for (std::size_t r = 0; r < lt.l0.size(); ++r) {
    const auto& [i, j] = lt.generators[r];
    put(lt.l0_index(r), g.bracket(unit_vector(N, idx[i]), sigma.map.col(idx[j])));
  }
  return m;
}

AxiomReport check_lie_homomorphism(const SuperAlgebra& source, const SuperAlgebra& target, const Matrix& f,
                                   std::size_t max_witnesses) {
  const std::size_t n = source.dim();
  if (f.rows() != target.dim() || f.cols() != n)
    throw std::invalid_argument("check_lie_homomorphism: shape mismatch");
  AxiomReport rep;
  rep.subject = source.name() + " -> " + target.name();
  const std::string deg = "f preserves degree";
  const std::string hom = "f[x,y] = [f x, f y]";
  rep.axioms_checked = {deg, hom};
  rep.scope = "all basis elements and pairs";
  std::vector<Vector> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(f.col(i));
  for (std::size_t i = 0; i < n; ++i) {
    rep.count(deg);
    for (std::size_t r = 0; r < target.dim(); ++r)
      if (!img[i][r].is_zero() && target.degree(r) != source.degree(i)) {
        rep.add_violation({deg, {source.labels()[i]}, to_string(img[i]), "degree " + std::to_string(source.degree(i))},
                          max_witnesses);
        break;
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rep.count(hom);
      Vector lhs = f.apply(source.at(i, j).to_dense(n));
      Vector rhs = target.bracket(img[i], img[j]);
      if (lhs != rhs)
        rep.add_violation({hom, {source.labels()[i], source.labels()[j]}, to_string(lhs), to_string(rhs)},
                          max_witnesses);
    }
  return rep;
}

}  // namespace trialg
