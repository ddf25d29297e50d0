#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trialg/exactcore/linalg.hpp"
#include "trialg/trisys/tri_algebra.hpp"

namespace trialg {

enum class Simplicity { Simple, NotSimple, Degenerate, Inconclusive };
std::string to_string(Simplicity s);

struct SimplicityResult {
  Simplicity verdict = Simplicity::Inconclusive;
  std::optional<Subspace> witness;  // proper nonzero invariant subspace for NotSimple
  std::size_t envelope_dim = 0;
  std::string note;
};

/// Basis of the unital associative algebra generated by `gens`, as flattened n x n matrices.
Subspace associative_envelope(const std::vector<Matrix>& gens, std::size_t n);

/// Envelope dimension computed modulo a large prime. A value of n^2 certifies a full
/// rational envelope; nullopt when a denominator vanishes mod p.
std::optional<std::size_t> envelope_dim_mod_p(const std::vector<Matrix>& gens, std::size_t n);

/// Proper nonzero subspace stable under all operators, searched from basis vectors,
/// low-rank envelope images, the common kernel and the joint image.
std::optional<Subspace> find_invariant_subspace(const std::vector<Matrix>& ops, std::size_t n,
                                                const Subspace& envelope);

/// Analysis of the operators L_{e_i,e_j}.
SimplicityResult simplicity(const TriAlgebra& t);

}  // namespace trialg
