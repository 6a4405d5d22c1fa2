#include "plk/catalog.hpp"

#include <algorithm>

namespace plk::catalog {

namespace {

const Scalar I = Scalar::i();

Scalar q(long n, long d = 1) { return Scalar(make_rational(n, d)); }

std::string rat_id(const Rational& r) {
  std::string s = rational_str(r);
  for (auto& ch : s)
    if (ch == '/') ch = '_';
  return s;
}

}  // namespace

LieAlgebra lie_b() { return make_lie_algebra({"x", "t"}, {{0, 1, 0, 1}}); }

LieBialgebra carrier_of(const LieAlgebra& m) { return dualize(with_zero_cobracket(m)); }

PreLieProduct b1(const Rational& alpha) {
  return make_prelie({"x", "t"}, {{1, 0, 0, -1}, {1, 1, 1, Scalar(alpha)}});
}

PreLieProduct b2(const Rational& beta) {
  return make_prelie({"x", "t"}, {{0, 1, 0, Scalar(beta)}, {1, 0, 0, Scalar(beta - 1)}, {1, 1, 1, Scalar(beta)}});
}

PreLieProduct b3() { return make_prelie({"x", "t"}, {{1, 0, 0, -1}, {1, 1, 0, 1}, {1, 1, 1, -1}}); }

PreLieProduct b4() { return make_prelie({"x", "t"}, {{0, 0, 1, 1}, {1, 0, 0, -1}, {1, 1, 1, -2}}); }

PreLieProduct b5() { return make_prelie({"x", "t"}, {{0, 1, 0, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}}); }

LieBialgebra su2_chevalley() {
  Names n{"H", "X+", "X-"};
  LieAlgebra l = make_lie_algebra(n, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}});
  LieCoalgebra c = make_lie_coalgebra(n, {{1, 1, 0, I * q(1, 2)}, {2, 2, 0, I * q(1, 2)}});
  return make_bialgebra(l, c);
}

PreLieProduct su2_star_xi() {
  return make_prelie({"phi", "psi+", "psi-"},
                     {{0, 0, 0, -I}, {0, 1, 1, -I * q(1, 2)}, {0, 2, 2, -I * q(1, 2)}});
}

Matrix su2_real_form_basis() { return Matrix{{-2 * I, 0, 0}, {0, I, I}, {0, 1, -1}}; }

LieBialgebra su2_standard() {
  Names n{"e1", "e2", "e3"};
  LieAlgebra l = make_lie_algebra(n, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}});
  LieCoalgebra c = make_lie_coalgebra(n, {{0, 0, 2, I}, {1, 1, 2, I}});
  return make_bialgebra(l, c);
}

Matrix su2_dual_rescaling() { return Matrix{{-I, 0, 0}, {0, -I, 0}, {0, 0, -I}}; }

PreLieProduct su2_star_b1_circ() {
  PreLieProduct in_x = make_prelie({"x1", "x2", "x3"}, {{2, 2, 2, -2}, {2, 0, 0, -1}, {2, 1, 1, -1}});
  return change_basis(in_x, inverse(su2_dual_rescaling()), {"f1", "f2", "f3"});
}

RMatrix rmatrix_b() {
  LieAlgebra l = lie_b();
  Tensor r({2, 2});
  r.set({0, 1}, 1);
  r.set({1, 0}, -1);
  return {coboundary_bialgebra(l, r), r};
}

RMatrix rmatrix_b_plus_z() {
  LieAlgebra l = make_lie_algebra({"x", "t", "z"}, {{0, 1, 0, 1}});
  Tensor r({3, 3});
  r.set({0, 1}, 1);
  r.set({1, 0}, -1);
  r.set({2, 2}, 1);
  return {coboundary_bialgebra(l, r), r};
}

RMatrix rmatrix_sl2_jordan() {
  LieAlgebra l = make_lie_algebra({"H", "X+", "X-"}, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}});
  Tensor r({3, 3});
  r.set({0, 1}, 1);
  r.set({1, 0}, -1);
  return {coboundary_bialgebra(l, r), r};
}

LieAlgebra lie_m() { return make_lie_algebra({"x", "y"}, {{0, 1, 0, 1}}); }

CotangentInput cotangent_family1() {
  LieAlgebra m = lie_m();
  CotangentInput c;
  c.carrier = carrier_of(m);
  c.xi = make_prelie(m.basis_names, {{1, 0, 0, -1}, {1, 1, 1, q(-1, 2)}});
  c.circ = c.xi;
  c.star = make_prelie(c.carrier.names(), {{1, 1, 0, 1}});
  return c;
}

CotangentInput cotangent_family2() {
  LieAlgebra m = lie_m();
  CotangentInput c;
  c.carrier = carrier_of(m);
  c.xi = make_prelie(m.basis_names, {{1, 0, 0, -1}});
  c.circ = c.xi;
  c.star = make_prelie(c.carrier.names(), {{0, 1, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 1}});
  return c;
}

BisumData kk_blie(const PreLieProduct& circ_on_b) {
  LieAlgebra m = induced_bracket(circ_on_b);
  return {circ_on_b, carrier_of(m)};
}

std::vector<PreLieInstance> prelie_instances() {
  std::vector<PreLieInstance> out;
  LieBialgebra bc = carrier_of(lie_b());
  for (long a : {-2, 0, 1, 3}) out.push_back({"b1_" + rat_id(a), b1(a), bc});
  for (long b : {1, 2}) out.push_back({"b2_" + rat_id(b), b2(b), bc});
  out.push_back({"b3", b3(), bc});
  out.push_back({"b4", b4(), bc});
  out.push_back({"b5", b5(), bc});
  out.push_back({"su2star", su2_star_xi(), su2_chevalley()});
  out.push_back({"su2star_b1", su2_star_b1_circ(), su2_standard()});
  for (auto [id, r] : {std::pair{"qt_b", rmatrix_b()}, std::pair{"qt_bz", rmatrix_b_plus_z()},
                       std::pair{"qt_sl2", rmatrix_sl2_jordan()}})
    out.push_back({id, xi_from_rmatrix(r), r.carrier});
  return out;
}

GroupDGAData group_trivial() { return {"trivial", {{0}}, {{0}}, {1}}; }

GroupDGAData group_z2() { return {"z2", {{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}, {1, 0}}; }

GroupDGAData group_s3() {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::size_t m = perms.size();
  std::vector<std::vector<std::size_t>> cayley(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> ab(3);
      for (std::size_t i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
      cayley[a][b] = std::size_t(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  return {"s3", cayley, perms, {1, 0, 0}};
}

std::vector<GroupDGAData> group_instances() { return {group_trivial(), group_z2(), group_s3()}; }

}  // namespace plk::catalog
