#include "trialg/catalog/o3_identification.hpp"

#include "trialg/catalog/finite_families.hpp"
#include "trialg/exactcore/linalg.hpp"
#include "trialg/trisys/intertwiner.hpp"

namespace trialg {

std::vector<Matrix> invariant_metrics(const TriAlgebra& t) {
  const std::size_t n = t.dim();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<std::vector<std::size_t>> slot(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      slot[a][b] = slot[b][a] = unknowns.size();
      unknowns.emplace_back(a, b);
    }
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix l = t.left_op(i, j);
      if (l.is_zero()) continue;
      // (L^T S + S L)(r, c) = sum_m L(m,r) S(m,c) + S(r,m) L(m,c)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
          Vector row(unknowns.size());
          for (std::size_t m = 0; m < n; ++m) {
            row[slot[m][c]] += l(m, r);
            row[slot[r][m]] += l(m, c);
          }
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }
  std::vector<Matrix> out;
  const Matrix sys = rows.empty() ? Matrix(0, unknowns.size()) : Matrix::from_rows(rows, unknowns.size());
  for (const auto& v : nullspace(sys)) {
    Matrix s(n, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u) s(unknowns[u].first, unknowns[u].second) = s(unknowns[u].second, unknowns[u].first) = v[u];
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<O3Identification> identify_o3(const TriAlgebra& t) {
  if (t.dim() != 4) return std::nullopt;
  std::optional<Matrix> metric;
  for (const auto& s : invariant_metrics(t))
    if (!s.determinant().is_zero()) {
      metric = s;
      break;
    }
  if (!metric) return std::nullopt;
  const Congruence c = diagonalize_symmetric(*metric);
  const TriAlgebra moved = change_basis(t, c.p);
  const Vector f123 = moved.at(0, 1, 2).to_dense(4);
  for (std::size_t l = 0; l < 3; ++l)
    if (!f123[l].is_zero()) return std::nullopt;
  if (f123[3].is_zero()) return std::nullopt;

  O3Identification out;
  out.basis = c.p;
  out.map = *c.p.inverse();
  out.metric = c.diagonal;
  out.scale = f123[3] * c.diagonal[3];
  for (const auto& d : c.diagonal) (d.sign() > 0 ? out.positive : out.negative) += 1;
  out.target = o3(out.metric, out.scale);
  out.check = check_intertwiner(t, out.target, out.map);
  if (!out.check.passed()) return std::nullopt;
  return out;
}

}  // namespace trialg
