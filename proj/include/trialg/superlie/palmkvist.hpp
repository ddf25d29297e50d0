#pragma once

#include <utility>
#include <vector>

#include "trialg/superlie/super_algebra.hpp"
#include "trialg/trisys/tri_algebra.hpp"

namespace trialg {

/// An element of Lie_0 T as its action pair: A on L_-1, B on the phi-coordinates of L_1.
struct L0Element {
  Matrix a;
  Matrix b;
};

/// Lie T with its conjugation and the maps back to T.
///
/// Basis order: e_1..e_n (L_-1 = Pi T), then the L_0 basis, then phi(e_1)..phi(e_n).
/// The L_0 basis is the subset of generators L_{e_i,e_j} kept by row reduction, in
/// lexicographic (i, j) order.
struct LieConstruction {
  SuperAlgebra algebra;
  GradedConjugation sigma;
  std::size_t n = 0;
  std::vector<L0Element> l0;
  std::vector<std::pair<std::size_t, std::size_t>> generators;

  [[nodiscard]] bool degenerate() const { return l0.empty(); }
  [[nodiscard]] std::size_t e_index(std::size_t i) const { return i; }
  [[nodiscard]] std::size_t l0_index(std::size_t r) const { return n + r; }
  [[nodiscard]] std::size_t phi_index(std::size_t i) const { return n + l0.size() + i; }
  /// sigma restricted to L_0, as a square matrix.
  [[nodiscard]] Matrix sigma_on_l0() const;
};

/// Builds Lie T. Throws std::invalid_argument if the L_0 generators do not close
/// under commutators, which happens only when T violates the N=6 identity.
LieConstruction lie_of(const TriAlgebra& t);

/// [u,v,w] = [[u, sigma v], w] on Pi L_-1. Throws std::invalid_argument when the
/// grading is not short and consistent or sigma is not a graded conjugation.
TriAlgebra bracket_from_conjugation(const SuperAlgebra& g, const GradedConjugation& sigma);

/// Linear map Lie(T_g) -> g for T_g = bracket_from_conjugation(g, sigma):
/// e_i -> e_i, phi_i -> -sigma(e_i), L_{e_i,e_j} -> [e_i, sigma e_j].
Matrix lie_embedding(const LieConstruction& lt, const SuperAlgebra& g, const GradedConjugation& sigma);

/// f[x,y] = [f x, f y] on all basis pairs, plus degree preservation.
AxiomReport check_lie_homomorphism(const SuperAlgebra& source, const SuperAlgebra& target, const Matrix& f,
                                   std::size_t max_witnesses = 5);

}  // namespace trialg
