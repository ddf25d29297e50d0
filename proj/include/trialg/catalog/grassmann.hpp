#pragma once

#include "trialg/n5bridge/n5bridge.hpp"
#include "trialg/superlie/super_algebra.hpp"
#include "trialg/superpoly/superpoly.hpp"

namespace trialg {

/// Odd part of the Grassmann algebra on xi_1..xi_2k with [a,b,c] = {{a,b},c},
/// {a,b} = sum_i da/dxi_i db/dxi_i (left derivatives), and the pairing
/// (a,b) = coefficient of xi_1...xi_2k in a b. Basis: odd monomials by size, then lexicographically.
struct GrassmannN5 {
  TriAlgebra algebra;
  BilinearForm form;
  UniversePtr universe;
  std::vector<Monomial> basis;
};

GrassmannN5 grassmann_n5(unsigned k);

/// The Grassmann algebra on 2k generators as a Lie superalgebra with
/// {a,b} = (-1)^{p(a)+1} sum_i da/dxi_i db/dxi_i; basis in the same order as grassmann_n5,
/// all monomials included. Degree equals parity.
SuperAlgebra grassmann_poisson_superalgebra(unsigned k);

/// Monomials of the Grassmann algebra on n generators ordered by size, then lexicographically.
std::vector<Monomial> grassmann_monomials(unsigned n, bool odd_only);

}  // namespace trialg
