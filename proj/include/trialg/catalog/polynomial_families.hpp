#pragma once

#include "trialg/superpoly/superpoly.hpp"
#include "trialg/trisys/tri_evaluator.hpp"

namespace trialg {

/// P^3(m; phi) on P(m,0), sigma(g) = -g o phi. Throws std::invalid_argument unless
/// phi satisfies the form condition.
TriEvaluator p3(unsigned m, const LinearChange& phi);
/// The default involution p <-> q (and t -> -t).
TriEvaluator p3(unsigned m);

/// SW^3(a) on two copies of F[x]; phi is x -> phi * x with phi = +-1.
/// Requires det a = 1 and either a^2 = -1, phi = -1 or a^2 = 1, phi = 1.
TriEvaluator sw3(const Matrix& a, const Rational& phi);
/// a = [[0,1],[-1,0]], phi = -1.
TriEvaluator sw3();

/// S^3(phi) on F[x1,x2]: det rows (f, phi g, h), D1, D2. phi is 2 x 2 with det 1, phi^2 = 1.
TriEvaluator s3(const Matrix& phi);
/// phi = -I.
TriEvaluator s3();

/// W^3(phi) on F[x1,x2,x3]: det rows D1, D2, D3 of (f, phi g, h). phi is 3 x 3 with det 1, phi^2 = 1.
TriEvaluator w3(const Matrix& phi);
/// phi = diag(1,-1,-1).
TriEvaluator w3();

}  // namespace trialg
