#include "trialg/trisys/intertwiner.hpp"

#include <functional>
#include <stdexcept>

namespace trialg {

namespace {

bool homomorphic(const TriAlgebra& s, const TriAlgebra& t, const Matrix& phi) {
  const std::size_t n = s.dim();
  std::vector<Vector> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(phi.col(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (phi.apply(s.at(i, j, k).to_dense(n)) != t.bracket(img[i], img[j], img[k])) return false;
  return true;
}

}  // namespace

bool LinearMap3::invertible() const { return matrix.is_square() && !matrix.determinant().is_zero(); }

AxiomReport check_intertwiner(const TriAlgebra& source, const TriAlgebra& target, const Matrix& phi,
                              std::size_t max_witnesses) {
  const std::size_t n = source.dim();
  if (target.dim() != n || phi.rows() != n || phi.cols() != n || phi.determinant().is_zero())
    throw std::invalid_argument("check_intertwiner: map is not square invertible");
  AxiomReport rep;
  rep.subject = source.name() + " -> " + target.name();
  rep.axioms_checked = {"phi[x,y,z] = [phi x, phi y, phi z]"};
  rep.scope = "all basis triples; conclusive by multilinearity";
  std::vector<Vector> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(phi.col(i));
  const auto& labels = source.basis_labels();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        rep.count(rep.axioms_checked.front());
        Vector lhs = phi.apply(source.at(i, j, k).to_dense(n));
        Vector rhs = target.bracket(img[i], img[j], img[k]);
        if (lhs != rhs)
          rep.add_violation({rep.axioms_checked.front(), {labels[i], labels[j], labels[k]},
                             to_string(lhs), to_string(rhs)},
                            max_witnesses);
      }
  return rep;
}

AxiomReport check_intertwiner(const LinearMap3& f, std::size_t max_witnesses) {
  if (!f.source || !f.target) throw std::invalid_argument("check_intertwiner: missing algebra");
  return check_intertwiner(*f.source, *f.target, f.matrix, max_witnesses);
}

std::optional<Matrix> find_intertwiner(const TriAlgebra& source, const TriAlgebra& target,
                                       const std::vector<Matrix>& seeds, std::size_t node_budget) {
  const std::size_t n = source.dim();
  if (target.dim() != n) return std::nullopt;
  std::vector<Matrix> tries = seeds;
  tries.push_back(Matrix::identity(n));
  for (const auto& m : tries)
    if (m.rows() == n && m.cols() == n && !m.determinant().is_zero() && homomorphic(source, target, m))
      return m;

  // e_i -> sign_i * f_{perm_i}; prune whenever a triple with every index assigned and
  // output supported on assigned indices fails.
  std::vector<int> perm(n, -1), sign(n, 0);
  std::vector<bool> used(n, false);
  std::size_t nodes = 0;
  auto image = [&](std::size_t i) {
    Vector v(n);
    v[static_cast<std::size_t>(perm[i])] = sign[i];
    return v;
  };
  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i)
      for (std::size_t j = 0; j <= upto; ++j)
        for (std::size_t k = 0; k <= upto; ++k) {
          if (i != upto && j != upto && k != upto) continue;
          const SparseVec& src = source.at(i, j, k);
          bool assigned = true;
          for (const auto& [id, c] : src.entries) assigned = assigned && id <= upto;
          if (!assigned) continue;
          Vector lhs(n);
          for (const auto& [id, c] : src.entries) lhs[static_cast<std::size_t>(perm[id])] += c * Rational(sign[id]);
          if (lhs != target.bracket(image(i), image(j), image(k))) return false;
        }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t p = 0; p < n; ++p) {
      if (used[p]) continue;
      for (int s : {1, -1}) {
        if (++nodes > node_budget) return false;
        perm[i] = static_cast<int>(p);
        sign[i] = s;
        used[p] = true;
        if (consistent(i) && rec(i + 1)) return true;
        used[p] = false;
      }
    }
    perm[i] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(static_cast<std::size_t>(perm[i]), i) = sign[i];
  if (!homomorphic(source, target, m)) return std::nullopt;
  return m;
}

}  // namespace trialg
