#pragma once

#include "trialg/superpoly/superpoly.hpp"

namespace trialg {

/// Even generators p1..pk, q1..qk, and t when m = 2k+1.
UniversePtr poisson_universe(unsigned m);

/// Bracket of the generalized Poisson algebra P(m,0).
SuperPoly poisson(const SuperPoly& f, const SuperPoly& g, unsigned m);

/// Euler operator sum p_i d/dp_i + q_i d/dq_i.
SuperPoly euler(const SuperPoly& f, unsigned m);

/// D = 2 d/dt for odd m, zero for even m.
SuperPoly poisson_derivation(const SuperPoly& f, unsigned m);

/// The default involution: p_i <-> q_i, and t -> -t when m is odd.
LinearChange default_poisson_involution(unsigned m);

/// True iff c is involutive and pulls the (contact) 1-form back to its negative.
bool check_form_condition(const LinearChange& c, unsigned m);

}  // namespace trialg
