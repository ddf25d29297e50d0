#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "trialg/trisys/report.hpp"
#include "trialg/trisys/tri_algebra.hpp"

namespace trialg {

/// A linear map between finite 3-algebras; matrix maps source coordinates to target coordinates.
struct LinearMap3 {
  std::shared_ptr<const TriAlgebra> source;
  std::shared_ptr<const TriAlgebra> target;
  Matrix matrix;

  [[nodiscard]] bool invertible() const;
};

/// Checks phi([x,y,z]) = [phi x, phi y, phi z] on all basis triples.
/// Throws std::invalid_argument if phi is not square invertible.
AxiomReport check_intertwiner(const TriAlgebra& source, const TriAlgebra& target, const Matrix& phi,
                              std::size_t max_witnesses = 5);
AxiomReport check_intertwiner(const LinearMap3& f, std::size_t max_witnesses = 5);

/// Tries the seeds (and the identity), then a backtracking search over signed
/// permutation matrices. Failure means "no intertwiner found", nothing more.
std::optional<Matrix> find_intertwiner(const TriAlgebra& source, const TriAlgebra& target,
                                       const std::vector<Matrix>& seeds = {},
                                       std::size_t node_budget = 200000);

}  // namespace trialg
