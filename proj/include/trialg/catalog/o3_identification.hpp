#pragma once

#include <optional>

#include "trialg/trisys/report.hpp"
#include "trialg/trisys/tri_algebra.hpp"

namespace trialg {

/// Symmetric S with ([x,y,z], w) + (z, [x,y,w]) = 0 for all basis x, y; a basis of the
/// solution space, each as a symmetric matrix.
std::vector<Matrix> invariant_metrics(const TriAlgebra& t);

/// An isomorphism of a 4-dimensional 3-Lie algebra onto O^3(metric, scale).
struct O3Identification {
  Matrix basis;     // columns: the new basis in source coordinates
  Matrix map;       // source coordinates -> target coordinates (basis^{-1})
  Vector metric;    // diagonal of the invariant metric in the new basis
  Rational scale;
  int positive = 0;  // signature of the invariant metric
  int negative = 0;
  TriAlgebra target;
  AxiomReport check;
};

/// Diagonalizes a nondegenerate invariant metric by congruence and reads the scale off
/// [f1,f2,f3]. nullopt when there is no nondegenerate invariant metric or the bracket
/// does not have the O^3 shape in that basis.
std::optional<O3Identification> identify_o3(const TriAlgebra& t);

}  // namespace trialg
