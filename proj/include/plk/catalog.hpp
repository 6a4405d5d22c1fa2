#pragma once

#include <string>
#include <vector>

#include "plk/constructions.hpp"
#include "plk/group_dga.hpp"

namespace plk::catalog {

// b = span{x, t} with [x, t] = x.
LieAlgebra lie_b();
// Carrier bialgebra of a pre-Lie product on b: abelian g = b* whose
// cobracket is the transpose of the bracket of b.
LieBialgebra carrier_of(const LieAlgebra& m);

// The five 2D families on b.
PreLieProduct b1(const Rational& alpha);
PreLieProduct b2(const Rational& beta);
PreLieProduct b3();
PreLieProduct b4();
PreLieProduct b5();

// su2 in the Chevalley basis (H, X+, X-), cobracket delta X+- = (i/2) X+- ^ H.
LieBialgebra su2_chevalley();
// Semiclassical Xi on su2* in the dual basis (phi, psi+, psi-).
PreLieProduct su2_star_xi();
// Rows give t, x1, x2 in terms of (phi, psi+, psi-).
Matrix su2_real_form_basis();

// su2 with [e_i, e_j] = eps_ijk e_k and delta e_i = i e_i ^ e_3.
LieBialgebra su2_standard();
// x^i = -i f^i, as the rows of a basis-change matrix on su2*.
Matrix su2_dual_rescaling();
// x3 o x3 = -2 x3, x3 o x_i = -x_i, expressed on the dual basis f^i.
PreLieProduct su2_star_b1_circ();

// r-matrix instances with their coboundary carriers.
RMatrix rmatrix_b();          // r = x ^ t on b
RMatrix rmatrix_b_plus_z();   // r = x ^ t + z (x) z on b (+) k z
RMatrix rmatrix_sl2_jordan(); // r = H ^ X+ on sl2

// m = span{x, y} with [x, y] = x and the two cotangent families.
LieAlgebra lie_m();
CotangentInput cotangent_family1();
CotangentInput cotangent_family2();

// Example data for the bisum: abelian g = b*, Xi = o for a pre-Lie o on b.
struct BisumData {
  PreLieProduct xi;
  LieBialgebra carrier;
};
BisumData kk_blie(const PreLieProduct& circ_on_b);

struct PreLieInstance {
  std::string id;
  PreLieProduct product;
  LieBialgebra carrier;  // product lives on the dual of carrier
};
// All pre-Lie instances with their carriers: the five families at the
// catalog parameters, su2*, and the r-matrix products.
std::vector<PreLieInstance> prelie_instances();

// Group DGA inputs, identity first, theta = x_1 throughout.
GroupDGAData group_trivial();  // G = {e}, X = {x1}
GroupDGAData group_z2();       // swap on {x1, x2}
GroupDGAData group_s3();       // S3 on {x1, x2, x3}
std::vector<GroupDGAData> group_instances();

}  // namespace plk::catalog
