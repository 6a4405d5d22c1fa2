#pragma once

#include "plk/lie.hpp"

namespace plk {

// x_i o x_j = sum_k xi(i,j,k) x_k.  When the product lives on g* the basis
// is the dual basis f^i and xi(i,j,k) = <Xi(f^i,f^j), e_k>.
struct PreLieProduct {
  std::size_t dim = 0;
  Names basis_names;
  Tensor xi;

  Vec mul(const Vec& a, const Vec& b) const { return Dense3(xi).apply(a, b); }
};

PreLieProduct make_prelie(Names names, const std::vector<Entry>& products);
PreLieProduct zero_prelie(Names names);

// (x o y) o z - (y o x) o z = x o (y o z) - y o (x o z)
Check check_left_symmetry(const PreLieProduct& x);
// Antisymmetrisation, without checking anything.
LieAlgebra commutator_bracket(const PreLieProduct& x);
// Throws PreconditionError unless x is left-symmetric.
LieAlgebra induced_bracket(const PreLieProduct& x);
Check check_compatibility(const PreLieProduct& x, const LieAlgebra& l);
// Xi([a,b]_l, c) = Xi(a, Xi(b,c)) - Xi(b, Xi(a,c))
Check check_flat_right_action(const PreLieProduct& x, const LieAlgebra& l);

// The three equivalent forms of the bicovariance condition on g*; the
// bracket of g enters as the cobracket of g*.
Check check_bicovariance(const PreLieProduct& x, const LieBialgebra& b);
Check check_bi_condition(const PreLieProduct& x, const LieBialgebra& b);
Check check_crossvector_condition(const PreLieProduct& x, const LieBialgebra& b);

// -Xi as an action of g* on itself, actor first: f^i |> f^j = -Xi(f^i,f^j).
ActionTensor minus_xi_action(const PreLieProduct& x);

// r(1) (x) [r(2),x] + r(2) (x) [r(1),x] = 0 for every basis element x.
Check check_rmatrix_symmetric_part(const RMatrix& r);
// Xi(phi,psi) = -<phi, r(2)> ad*_{r(1)} psi.  Throws PreconditionError when the
// symmetric-part condition fails.
PreLieProduct xi_from_rmatrix(const RMatrix& r);
inline Check check_cybe(const RMatrix& r) { return check_cybe(r.carrier.algebra, r.r); }

// Christoffel-type table (i,j) -> sum_k Xi^{ij}_k w^k.
Tensor preconnection_matrix(const PreLieProduct& x);

// New basis b_a = sum_i p(a,i) f^i.
PreLieProduct change_basis(const PreLieProduct& x, const Matrix& p, Names names);
// Restriction to the span of the given basis indices.  Throws
// PreconditionError if that span is not closed under the product.
PreLieProduct restrict_to(const PreLieProduct& x, const std::vector<std::size_t>& idx);

// Commutativity and associativity, used for the * products.
Check check_commutative(const PreLieProduct& x);
Check check_associative(const PreLieProduct& x);

}  // namespace plk
