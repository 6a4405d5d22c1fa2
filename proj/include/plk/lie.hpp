#pragma once

#include <string>
#include <vector>

#include "plk/check.hpp"
#include "plk/dense.hpp"
#include "plk/linalg.hpp"
#include "plk/tensor.hpp"

namespace plk {

using Names = std::vector<std::string>;

// One structure constant: table(i, j, k) = c.
struct Entry {
  std::size_t i, j, k;
  Scalar c;
};

// [e_i, e_j] = sum_k bracket(i,j,k) e_k.
struct LieAlgebra {
  std::size_t dim = 0;
  Names basis_names;
  Tensor bracket;

  Vec br(const Vec& a, const Vec& b) const;
};

// delta e_i = sum_{jk} cobracket(i,j,k) e_j (x) e_k.
struct LieCoalgebra {
  std::size_t dim = 0;
  Names basis_names;
  Tensor cobracket;
};

struct LieBialgebra {
  LieAlgebra algebra;
  LieCoalgebra coalgebra;
  std::size_t dim() const { return algebra.dim; }
  const Names& names() const { return algebra.basis_names; }
};

// Each entry [e_i,e_j] += c e_k is stored together with its antisymmetric
// partner.
LieAlgebra make_lie_algebra(Names names, const std::vector<Entry>& brackets);
LieAlgebra abelian_lie_algebra(Names names);
// Each entry adds c e_j ^ e_k = c (e_j(x)e_k - e_k(x)e_j) to delta e_i.
LieCoalgebra make_lie_coalgebra(Names names, const std::vector<Entry>& wedges);
LieCoalgebra zero_coalgebra(Names names);
LieBialgebra make_bialgebra(LieAlgebra alg, LieCoalgebra coalg);
LieBialgebra with_zero_cobracket(const LieAlgebra& alg);
Names dual_names(const Names& names);

// Checks antisymmetry and Jacobi on every basis triple.
Report check_lie_algebra(const Tensor& c);
inline Report check_lie_algebra(const LieAlgebra& l) { return check_lie_algebra(l.bracket); }
Report check_lie_coalgebra(const Tensor& d);
Check check_bialgebra_cocycle(const LieBialgebra& b);
// Algebra axioms, coalgebra axioms and the cocycle condition together.
Report check_lie_bialgebra(const LieBialgebra& b);

// [f^j, f^k] = sum_i d(i,j,k) f^i.
Tensor cobracket_transpose(const Tensor& d);
// delta f^k = sum_ij c(i,j,k) f^i (x) f^j.
Tensor bracket_transpose(const Tensor& c);
// Lie algebra g* of a bialgebra g.
LieAlgebra dual_lie_algebra(const LieBialgebra& b);
LieBialgebra dualize(const LieBialgebra& b);

Matrix cobracket_of(const LieCoalgebra& c, const Vec& v);

// e_i |> v_j = sum_k coeffs(i,j,k) v_k.  For right actions the actor index
// still comes first: v_j <| e_i = sum_k coeffs(i,j,k) v_k.
struct ActionTensor {
  std::size_t actor_dim = 0, target_dim = 0;
  Tensor coeffs;
  bool is_action = true;

  ActionTensor() = default;
  ActionTensor(std::size_t actor, std::size_t target, bool action = true);
  Vec act(const Vec& actor, const Vec& target) const;
};

// [x,y] |> v = x |> (y |> v) - y |> (x |> v)
Check check_left_action(const ActionTensor& a, const LieAlgebra& actor);
// v <| [x,y] = (v <| x) <| y - (v <| y) <| x
Check check_right_action(const ActionTensor& a, const LieAlgebra& actor);

// <ad*_x phi, y> = -<phi, [x,y]> on the dual basis.
ActionTensor coadjoint_action(const LieAlgebra& l);
inline ActionTensor coadjoint_action(const LieBialgebra& b) { return coadjoint_action(b.algebra); }

// right_action: g acting on m from the right; left_action: m acting on g.
struct MatchedPair {
  LieAlgebra g, m;
  ActionTensor right_action, left_action;
};

Report check_matched_pair(const MatchedPair& p);
// Bracket on g (+) m, g block first.  Throws PreconditionError unless
// check_matched_pair passes.
LieAlgebra double_cross_sum(const MatchedPair& p);
LieAlgebra double_cross_sum_unchecked(const MatchedPair& p);

struct BialgebraMatchedPair {
  LieBialgebra g, m;
  ActionTensor right_action, left_action;
  MatchedPair lie() const { return {g.algebra, m.algebra, right_action, left_action}; }
};

// Bialgebra on m (+) g*, m block first.  Throws PreconditionError when the
// result fails the bialgebra axioms.
LieBialgebra bicross_sum(const BialgebraMatchedPair& p);
LieBialgebra bicross_sum_unchecked(const BialgebraMatchedPair& p);

// (g*-bar, g-bar, xi <| phi = -ad*_phi xi, xi |> phi = ad*_xi phi) with both
// sides carrying zero cobracket; the bicross sum is the tangent bialgebra.
BialgebraMatchedPair tangent_matched_pair(const LieBialgebra& b);
// (m, m*-bar, f <| xi = -ad*_xi f, zero left action).
BialgebraMatchedPair tm_star_matched_pair(const LieAlgebra& m);

struct CrossedModuleResult {
  Check action;       // act is a left g-action
  Check cross;        // the almost-crossed identity
  Check dual_action;  // act_dual satisfies the right-action axiom for g*
  bool almost() const { return action.ok && cross.ok; }
  bool full() const { return almost() && dual_action.ok; }
};

// act: g on V, act_dual: g* on V (both actor-first).
CrossedModuleResult check_crossed_module(const LieBialgebra& b, const ActionTensor& act,
                                         const ActionTensor& act_dual);

struct RMatrix {
  LieBialgebra carrier;
  Tensor r;  // r = sum r(a,b) e_a (x) e_b
};

// delta x = [x, r1] (x) r2 + r1 (x) [x, r2].
LieBialgebra coboundary_bialgebra(const LieAlgebra& l, const Tensor& r);
Check check_cybe(const LieAlgebra& l, const Tensor& r);

// New basis b_a = sum_i p(a,i) e_i.  Product-type tables (in,in,out) and
// coproduct-type tables (in,out,out) transform differently.
Tensor change_basis_product(const Tensor& t, const Matrix& p);
Tensor change_basis_coproduct(const Tensor& t, const Matrix& p);
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p, Names names);

}  // namespace plk
