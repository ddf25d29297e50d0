#include "trialg/superlie/super_algebra.hpp"

#include <stdexcept>

namespace trialg {

namespace {

int koszul(int a, int b) { return (a & b & 1) ? -1 : 1; }

Subspace degree_span(const SuperAlgebra& g, int d) {
  Subspace s(g.dim());
  for (auto i : g.indices_of_degree(d)) s.insert(unit_vector(g.dim(), i));
  return s;
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  Subspace sum = a;
  for (const auto& v : b.basis()) sum.insert(v);
  return a.dim() + b.dim() - sum.dim();
}

std::vector<Matrix> ad_operators(const SuperAlgebra& g) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix m = g.ad(i);
    if (!m.is_zero()) ops.push_back(std::move(m));
  }
  return ops;
}

std::string label_vec(const SuperAlgebra& g, const Vector& v) {
  return SparseVec::from_dense(v).str([&](std::uint32_t id) { return g.labels()[id]; });
}

}  // namespace

SuperAlgebra::SuperAlgebra(std::string name, std::vector<std::string> labels, std::vector<int> degrees,
                           std::vector<int> parities)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      degrees_(std::move(degrees)),
      parities_(std::move(parities)) {
  if (degrees_.size() != labels_.size() || parities_.size() != labels_.size())
    throw std::invalid_argument("SuperAlgebra: labels, degrees and parities differ in length");
  table_.resize(labels_.size() * labels_.size());
}

std::vector<std::size_t> SuperAlgebra::indices_of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degrees_[i] == d) out.push_back(i);
  return out;
}

const SparseVec& SuperAlgebra::at(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw std::out_of_range("SuperAlgebra: index out of range");
  return table_[i * dim() + j];
}

void SuperAlgebra::set(std::size_t i, std::size_t j, SparseVec v) {
  if (i >= dim() || j >= dim()) throw std::out_of_range("SuperAlgebra: index out of range");
  for (const auto& [id, c] : v.entries)
    if (id >= dim()) throw std::out_of_range("SuperAlgebra: value outside the algebra");
  table_[i * dim() + j] = std::move(v);
}

Vector SuperAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("SuperAlgebra::bracket: size");
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const SparseVec& v = table_[i * n + j];
      if (v.is_zero()) continue;
      Rational s = x[i] * y[j];
      for (const auto& [id, c] : v.entries) r[id].add_mul(s, c);
    }
  }
  return r;
}

Matrix SuperAlgebra::ad(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [id, c] : at(i, j).entries) m(id, j) = c;
  return m;
}

bool SuperAlgebra::is_abelian() const {
  for (const auto& v : table_)
    if (!v.is_zero()) return false;
  return true;
}

bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
  return a.degrees_ == b.degrees_ && a.parities_ == b.parities_ && a.table_ == b.table_;
}

AxiomReport check_super_jacobi(const SuperAlgebra& g, std::size_t max_witnesses) {
  const std::size_t n = g.dim();
  AxiomReport rep;
  rep.subject = g.name();
  const std::string anti = "[x,y] = -(-1)^{p(x)p(y)} [y,x]";
  const std::string jac = "[x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]";
  rep.axioms_checked = {anti, jac};
  rep.scope = "all basis pairs and triples; conclusive by multilinearity";
  const auto& l = g.labels();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rep.count(anti);
      Vector lhs = g.at(i, j).to_dense(n);
      Vector rhs = Rational(-koszul(g.parity(i), g.parity(j))) * g.at(j, i).to_dense(n);
      if (lhs != rhs)
        rep.add_violation({anti, {l[i], l[j]}, label_vec(g, lhs), label_vec(g, rhs)}, max_witnesses);
    }
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector xy = g.at(i, j).to_dense(n);
      Matrix ad_xy(n, n);
      for (std::size_t c = 0; c < n; ++c)
        if (!xy[c].is_zero()) ad_xy += xy[c] * ads[c];
      // [x,[y,.]] - [[x,y],.] - s [y,[x,.]] as one operator
      Matrix diff = ads[i] * ads[j] - ad_xy -
                    Rational(koszul(g.parity(i), g.parity(j))) * (ads[j] * ads[i]);
      for (std::size_t k = 0; k < n; ++k) {
        rep.count(jac);
        Vector col = diff.col(k);
        if (!is_zero(col)) {
          Vector lhs = ads[i].apply(ads[j].col(k));
          rep.add_violation({jac, {l[i], l[j], l[k]}, label_vec(g, lhs), label_vec(g, lhs - col)},
                            max_witnesses);
        }
      }
    }
  return rep;
}

bool check_consistency(const SuperAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (((g.degree(i) % 2) + 2) % 2 != g.parity(i)) return false;
  return true;
}

bool check_shortness(const SuperAlgebra& g) {
  for (auto d : g.degrees())
    if (d < -1 || d > 1) return false;
  return true;
}

bool check_grading(const SuperAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (const auto& [id, c] : g.at(i, j).entries)
        if (g.degree(id) != g.degree(i) + g.degree(j) ||
            g.parity(id) != ((g.parity(i) + g.parity(j)) & 1))
          return false;
  return true;
}

AxiomReport verify_conjugation(const SuperAlgebra& g, const GradedConjugation& s,
                               std::size_t max_witnesses) {
  const std::size_t n = g.dim();
  AxiomReport rep;
  rep.subject = g.name();
  const std::string shape = "sigma has the algebra's shape";
  const std::string rev = "sigma(g_j) = g_-j";
  const std::string hom = "sigma[x,y] = [sigma x, sigma y]";
  const std::string sq = "sigma^2 = (-1)^k on g_k";
  rep.axioms_checked = {rev, hom, sq};
  rep.scope = "all basis elements and pairs";
  if (s.map.rows() != n || s.map.cols() != n) {
    rep.count(shape);
    rep.add_violation({shape, {}, s.map.str(), std::to_string(n) + "x" + std::to_string(n)}, max_witnesses);
    return rep;
  }
  const auto& l = g.labels();
  std::vector<Vector> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(s.map.col(i));
  for (std::size_t i = 0; i < n; ++i) {
    rep.count(rev);
    for (std::size_t r = 0; r < n; ++r)
      if (!img[i][r].is_zero() && g.degree(r) != -g.degree(i)) {
        rep.add_violation({rev, {l[i]}, label_vec(g, img[i]), "degree " + std::to_string(-g.degree(i))},
                          max_witnesses);
        break;
      }
  }
  Matrix s2 = s.map * s.map;
  for (std::size_t i = 0; i < n; ++i) {
    rep.count(sq);
    Vector want = unit_vector(n, i);
    if (g.degree(i) % 2) want = -want;
    if (s2.col(i) != want)
      rep.add_violation({sq, {l[i]}, label_vec(g, s2.col(i)), label_vec(g, want)}, max_witnesses);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rep.count(hom);
      Vector lhs = s.map.apply(g.at(i, j).to_dense(n));
      Vector rhs = g.bracket(img[i], img[j]);
      if (lhs != rhs) rep.add_violation({hom, {l[i], l[j]}, label_vec(g, lhs), label_vec(g, rhs)}, max_witnesses);
    }
  return rep;
}

bool check_transitivity(const SuperAlgebra& g) {
  const auto minus = g.indices_of_degree(-1);
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(i) < -1 || g.degree(i) > 1) return false;
  for (int d : {0, 1}) {
    const auto idx = g.indices_of_degree(d);
    if (idx.empty()) continue;
    // Column b holds ([e_b, e_m])_m stacked; injectivity = full column rank.
    Matrix m(minus.size() * n, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (std::size_t r = 0; r < minus.size(); ++r)
        for (const auto& [id, v] : g.at(idx[c], minus[r]).entries) m(r * n + id, c) = v;
    if (rank(m) != idx.size()) return false;
  }
  return true;
}

bool check_generation(const SuperAlgebra& g) {
  const std::size_t n = g.dim();
  Subspace span(n);
  for (auto i : g.indices_of_degree(-1))
    for (auto j : g.indices_of_degree(1)) span.insert(g.at(i, j).to_dense(n));
  return span == degree_span(g, 0);
}

Subspace generated_ideal(const SuperAlgebra& g, const std::vector<Vector>& seeds) {
  return subspace_close(g.dim(), seeds, ad_operators(g));
}

bool check_ideal_property(const SuperAlgebra& g) {
  const std::size_t n = g.dim();
  const auto ops = ad_operators(g);
  const Subspace lm = degree_span(g, -1), lp = degree_span(g, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Subspace ideal = subspace_close(n, {unit_vector(n, i)}, ops);
    if (intersection_dim(ideal, lm) == 0 || intersection_dim(ideal, lp) == 0) return false;
  }
  return true;
}

SimplicityResult superalgebra_simplicity(const SuperAlgebra& g) {
  const std::size_t n = g.dim();
  SimplicityResult out;
  if (n == 0) {
    out.verdict = Simplicity::Degenerate;
    out.note = "zero algebra";
    return out;
  }
  if (g.is_abelian()) {
    out.verdict = Simplicity::NotSimple;
    out.note = "abelian";
    if (n > 1) out.witness = Subspace::span(n, {unit_vector(n, 0)});
    return out;
  }
  const auto ops = ad_operators(g);
  if (auto d = envelope_dim_mod_p(ops, n); d && *d == n * n) {
    out.verdict = Simplicity::Simple;
    out.envelope_dim = n * n;
    out.note = "associative envelope of ad is the full matrix algebra";
    return out;
  }
  Subspace env = associative_envelope(ops, n);
  out.envelope_dim = env.dim();
  if (env.is_full()) {
    out.verdict = Simplicity::Simple;
    out.note = "associative envelope of ad is the full matrix algebra";
    return out;
  }
  if (auto w = find_invariant_subspace(ops, n, env)) {
    out.verdict = Simplicity::NotSimple;
    out.note = "proper ideal of dimension " + std::to_string(w->dim());
    out.witness = std::move(w);
    return out;
  }
  out.verdict = Simplicity::Inconclusive;
  out.note = "no proper ideal found; envelope dimension " + std::to_string(env.dim()) + " < " +
             std::to_string(n * n);
  return out;
}

}  // namespace trialg
