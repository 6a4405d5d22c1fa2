#pragma once

#include "plk/prelie.hpp"

namespace plk {

// a: (A, o), b: (B, *), action: A acting on B from the left, actor first.
struct SemidirectInput {
  PreLieProduct a, b;
  ActionTensor action;
};

// a |> (x * y) = (a |> x) * y + x * (a |> y)
Check check_module_condition(const SemidirectInput& s);
// (x,a) o~ (y,b) = (x*y + a|>y, a o b) on B (+) A, B block first.  Throws
// PreconditionError on any failed hypothesis.
PreLieProduct semidirect_prelie(const SemidirectInput& s);
PreLieProduct semidirect_prelie_unchecked(const SemidirectInput& s);

// [f, phi*psi] = [f,phi]*psi + phi*[f,psi] with the bracket of g*.
Check check_poisson_condition(const PreLieProduct& star, const LieAlgebra& l);
// Hypotheses of the tangent construction as separate checks.
Report tangent_preconditions(const PreLieProduct& circ, const PreLieProduct& star, const LieBialgebra& b);
// (phi,f) o~ (psi,h) = (phi*psi + [f,psi], f o h) on g* (+) g*.
PreLieProduct tangent_prelie(const PreLieProduct& circ, const PreLieProduct& star, const LieBialgebra& b);
// The five identities equivalent to bicovariance of the tangent product.
Report check_tangent_bicovariance(const PreLieProduct& circ, const PreLieProduct& star, const LieBialgebra& b);
// Bicross sum of the tangent matched pair; its dual carries tangent_prelie.
LieBialgebra tangent_bialgebra(const LieBialgebra& b);

Check check_xi_ass(const PreLieProduct& x, const LieBialgebra& b);
Check check_xi_con(const PreLieProduct& x, const LieBialgebra& b);
// Throws PreconditionError unless x is compatible with the bracket of g*.
Report check_braided_conditions(const PreLieProduct& x, const LieBialgebra& b);

// Psi[p][q][a][b]: component f^a (x) f^b of Psi(f^p, f^q).
Tensor infinitesimal_braiding(const PreLieProduct& x, const LieBialgebra& b);
// The coaction alpha(f^q) as a matrix over g (x) g*.
Matrix coaction_alpha(const PreLieProduct& x, const Vec& phi);

// Bialgebra on g* (+) g, g* block first.
LieBialgebra bisum_bialgebra(const PreLieProduct& x, const LieBialgebra& b);
LieBialgebra bisum_bialgebra_unchecked(const PreLieProduct& x, const LieBialgebra& b);

// Closed-form D(phi) as a 2n x 2n matrix in the bisum basis.
Matrix cocycle_D(const PreLieProduct& x, const LieBialgebra& b, const Vec& phi);

struct CotangentInput {
  LieBialgebra carrier;
  PreLieProduct xi, circ, star;
};

// f^i |> e_j = -sum_k Xi(i,k,j) e_k
ActionTensor xi_action(const PreLieProduct& x);
Report cotangent_preconditions(const CotangentInput& c);
// (x,phi) o~ (y,psi) = (x*y + phi|>y, phi o psi) on g (+) g*, g block first.
PreLieProduct cotangent_prelie(const CotangentInput& c);
Report check_cotangent_bicovariance(const CotangentInput& c);

}  // namespace plk
