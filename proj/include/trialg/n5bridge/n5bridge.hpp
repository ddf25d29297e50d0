#pragma once

#include "trialg/superlie/super_algebra.hpp"
#include "trialg/trisys/tri_algebra.hpp"

namespace trialg {

/// A bilinear form on a 3-algebra's space; (x, y) = x^T matrix y.
struct BilinearForm {
  Matrix matrix;

  [[nodiscard]] Rational operator()(const Vector& x, const Vector& y) const;
};

/// [a,b,c] = [[a,b],c] on the odd basis elements of g.
TriAlgebra n5_from_superalgebra(const SuperAlgebra& g);

/// g(N) = span{L_{a,b}} + Pi N, with [a,b] = L_{a,b}, [L, a] = L(a) and commutators on
/// the even part. Only the Z/2 grading is meaningful: degree equals parity. Throws
/// std::invalid_argument if the even part does not close, which requires an N=5 failure.
SuperAlgebra reconstruct_g(const TriAlgebra& n);

/// Invariance of ([a,b,c], d) under (ab), (cd) and (ac)(bd) on all basis 4-tuples.
/// Throws std::invalid_argument if the form is not skew-symmetric or has the wrong size.
AxiomReport check_invariant_form(const TriAlgebra& n, const BilinearForm& b, std::size_t max_witnesses = 5);

/// N=5 bracket on L + L', L' = {phi_x}, for an N=6 algebra T:
/// zero when a and b lie in the same summand, otherwise [a,b,c] = [[a,b],c] in Lie T.
/// Basis: e_1..e_n, then phi(e_1)..phi(e_n).
TriAlgebra reduce_n6_to_n5(const TriAlgebra& t);

}  // namespace trialg
