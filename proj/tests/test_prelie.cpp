#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "plk/catalog.hpp"

using namespace plk;
namespace cat = plk::catalog;

namespace {

const Scalar I = Scalar::i();

std::vector<PreLieProduct> five_families() {
  return {cat::b1(-2), cat::b1(0), cat::b1(1), cat::b1(3), cat::b2(1), cat::b2(2), cat::b3(), cat::b4(), cat::b5()};
}

// Xi = 1/2 [,] + S with S symmetric and random.
PreLieProduct random_compatible(const LieAlgebra& l, std::mt19937& rng, int range = 2) {
  std::size_t n = l.dim;
  std::uniform_int_distribution<int> v(-range, range);
  PreLieProduct x = zero_prelie(l.basis_names);
  Scalar half(make_rational(1, 2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s(make_rational(v(rng), 2));
        x.xi.add({i, j, k}, s + half * l.bracket(i, j, k));
        if (i != j) x.xi.add({j, i, k}, s + half * l.bracket(j, i, k));
      }
  return x;
}

}  // namespace

TEST(LeftSymmetry, Examples) {
  EXPECT_TRUE(check_left_symmetry(cat::b1(3)).ok);
  EXPECT_TRUE(check_left_symmetry(make_prelie({"x"}, {{0, 0, 0, 1}})).ok);
  PreLieProduct bad = make_prelie({"x", "t"}, {{0, 0, 0, 1}, {1, 0, 0, -1}, {1, 1, 1, -2}});
  EXPECT_FALSE(check_left_symmetry(bad).ok);
  EXPECT_FALSE(oracle::left_symmetric(bad.xi));
}

TEST(LeftSymmetry, AgreesWithOracleOnRandomProducts) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> v(-1, 1);
  std::size_t agree_true = 0;
  for (int trial = 0; trial < 400; ++trial) {
    PreLieProduct x = zero_prelie({"a", "b"});
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          if (v(rng) == 0) x.xi.set({i, j, k}, v(rng));
    bool o = oracle::left_symmetric(x.xi);
    EXPECT_EQ(check_left_symmetry(x).ok, o);
    agree_true += o;
  }
  EXPECT_GT(agree_true, 0u);
}

TEST(InducedBracket, Examples) {
  EXPECT_EQ(induced_bracket(cat::b2(2)).bracket, cat::lie_b().bracket);
  EXPECT_TRUE(induced_bracket(make_prelie({"a", "b"}, {{0, 0, 1, 1}})).bracket.is_zero());
  PreLieProduct s = make_prelie({"t", "x1", "x2"}, {{0, 0, 0, -2}, {0, 1, 1, -1}, {0, 2, 2, -1}});
  LieAlgebra l = induced_bracket(s);
  EXPECT_EQ(l.bracket, make_lie_algebra(s.basis_names, {{1, 0, 1, 1}, {2, 0, 2, 1}}).bracket);
  EXPECT_TRUE(check_lie_algebra(l).ok());
  PreLieProduct bad = make_prelie({"x", "t"}, {{0, 0, 0, 1}, {1, 0, 0, -1}, {1, 1, 1, -2}});
  EXPECT_THROW(induced_bracket(bad), PreconditionError);
}

TEST(Compatibility, FiveFamiliesWithB) {
  for (const auto& x : five_families()) {
    EXPECT_TRUE(check_left_symmetry(x).ok);
    EXPECT_TRUE(check_compatibility(x, cat::lie_b()).ok);
    EXPECT_TRUE(oracle::compatible(x.xi, cat::lie_b().bracket));
  }
  EXPECT_TRUE(check_compatibility(zero_prelie({"a", "b"}), abelian_lie_algebra({"a", "b"})).ok);
  LieAlgebra two = make_lie_algebra({"x", "t"}, {{0, 1, 0, 2}});
  EXPECT_FALSE(check_compatibility(cat::b5(), two).ok);
}

TEST(FlatRightAction, Examples) {
  EXPECT_TRUE(check_flat_right_action(cat::b3(), induced_bracket(cat::b3())).ok);
  EXPECT_TRUE(check_flat_right_action(zero_prelie({"a", "b"}), abelian_lie_algebra({"a", "b"})).ok);
  // compatible with [x,t]=x but not left-symmetric
  LieAlgebra b = cat::lie_b();
  bool found = false;
  for (int s = -2; s <= 2 && !found; ++s) {
    PreLieProduct x = cat::b1(1);
    x.xi.add({0, 0, 0}, s);
    if (!oracle::compatible(x.xi, b.bracket) || oracle::left_symmetric(x.xi)) continue;
    EXPECT_FALSE(check_flat_right_action(x, b).ok);
    found = true;
  }
  EXPECT_TRUE(found);
}

TEST(ZeroCurvature, FlatIffLeftSymmetricUnderCompatibility) {
  for (const auto& inst : cat::prelie_instances()) {
    LieAlgebra gd = dual_lie_algebra(inst.carrier);
    ASSERT_TRUE(check_compatibility(inst.product, gd).ok) << inst.id;
    EXPECT_EQ(check_flat_right_action(inst.product, gd).ok, check_left_symmetry(inst.product).ok) << inst.id;
  }
  std::mt19937 rng(17);
  LieAlgebra b = cat::lie_b();
  std::size_t n_true = 0;
  for (int trial = 0; trial < 300; ++trial) {
    PreLieProduct x = random_compatible(b, rng, 1);
    ASSERT_TRUE(check_compatibility(x, b).ok);
    bool ls = check_left_symmetry(x).ok;
    EXPECT_EQ(check_flat_right_action(x, b).ok, ls);
    EXPECT_EQ(oracle::flat(x.xi, b.bracket), oracle::left_symmetric(x.xi));
    n_true += ls;
  }
  EXPECT_GT(n_true, 0u);
}

TEST(Bicovariance, AbelianCarrierAlwaysBicovariant) {
  LieBialgebra c = cat::carrier_of(cat::lie_b());
  for (const auto& x : five_families()) EXPECT_TRUE(check_bicovariance(x, c).ok);
  EXPECT_TRUE(check_bicovariance(zero_prelie(dual_names(cat::su2_standard().names())), cat::su2_standard()).ok);
}

TEST(Bicovariance, Su2StarFailsOnSixPairs) {
  Check c = check_bicovariance(cat::su2_star_xi(), cat::su2_chevalley());
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.failures, 6u);
}

TEST(Bicovariance, ThreeFormsAgreeUnderCompatibility) {
  std::mt19937 rng(23);
  std::vector<LieBialgebra> carriers{cat::su2_chevalley(), cat::su2_standard(), cat::rmatrix_b().carrier,
                                     cat::rmatrix_sl2_jordan().carrier, cat::carrier_of(cat::lie_b())};
  for (const auto& inst : cat::prelie_instances()) {
    bool xb = check_bicovariance(inst.product, inst.carrier).ok;
    EXPECT_EQ(check_bi_condition(inst.product, inst.carrier).ok, xb) << inst.id;
    EXPECT_EQ(check_crossvector_condition(inst.product, inst.carrier).ok, xb) << inst.id;
  }
  for (const auto& b : carriers) {
    LieAlgebra gd = dual_lie_algebra(b);
    for (int trial = 0; trial < 40; ++trial) {
      PreLieProduct x = random_compatible(gd, rng, 1);
      bool xb = check_bicovariance(x, b).ok;
      EXPECT_EQ(check_bi_condition(x, b).ok, xb);
      EXPECT_EQ(check_crossvector_condition(x, b).ok, xb);
    }
  }
}

TEST(RMatrix, AbelianAndCentralGiveZero) {
  LieAlgebra ab = abelian_lie_algebra({"a", "b"});
  Tensor r({2, 2});
  r.set({0, 1}, 3);
  r.set({1, 1}, 1);
  EXPECT_TRUE(xi_from_rmatrix({coboundary_bialgebra(ab, r), r}).xi.is_zero());
  LieAlgebra bz = make_lie_algebra({"x", "t", "z"}, {{0, 1, 0, 1}});
  Tensor zz({3, 3});
  zz.set({2, 2}, 1);
  EXPECT_TRUE(xi_from_rmatrix({coboundary_bialgebra(bz, zz), zz}).xi.is_zero());
}

TEST(RMatrix, CatalogProductsArePreLieAndCompatible) {
  for (auto r : {cat::rmatrix_b(), cat::rmatrix_b_plus_z(), cat::rmatrix_sl2_jordan()}) {
    EXPECT_TRUE(check_rmatrix_symmetric_part(r).ok);
    PreLieProduct x = xi_from_rmatrix(r);
    LieAlgebra gd = dual_lie_algebra(r.carrier);
    EXPECT_TRUE(oracle::left_symmetric(x.xi));
    EXPECT_TRUE(oracle::compatible(x.xi, gd.bracket));
    EXPECT_TRUE(check_left_symmetry(x).ok);
    EXPECT_TRUE(check_compatibility(x, gd).ok);
  }
  // x ^ t on b gives a nonzero product
  EXPECT_FALSE(xi_from_rmatrix(cat::rmatrix_b()).xi.is_zero());
}

TEST(RMatrix, SymmetricPartViolationThrows) {
  LieAlgebra b = cat::lie_b();
  Tensor r({2, 2});
  r.set({1, 1}, 1);  // t (x) t, t not central
  RMatrix rm{with_zero_cobracket(b), r};
  EXPECT_FALSE(check_rmatrix_symmetric_part(rm).ok);
  EXPECT_THROW(xi_from_rmatrix(rm), PreconditionError);
}

TEST(PreconnectionMatrix, Su2StarEntries) {
  Tensor t = preconnection_matrix(cat::su2_star_xi());
  EXPECT_EQ(t.nnz(), 3u);
  EXPECT_EQ(t(0, 0, 0), -I);
  EXPECT_EQ(t(0, 1, 1), -I * Scalar(make_rational(1, 2)));
  EXPECT_EQ(t(0, 2, 2), -I * Scalar(make_rational(1, 2)));
  EXPECT_TRUE(preconnection_matrix(zero_prelie({"a"})).is_zero());
}

TEST(PreconnectionMatrix, B4Relations) {
  // [x,dx] = lam dt, [t,dx] = -lam dx, [t,dt] = -2 lam dt, [x,dt] = 0
  Tensor t = preconnection_matrix(cat::b4());
  EXPECT_EQ(t(0, 0, 1), Scalar(1));
  EXPECT_EQ(t(1, 0, 0), Scalar(-1));
  EXPECT_EQ(t(1, 1, 1), Scalar(-2));
  EXPECT_TRUE(t(0, 1, 0).is_zero() && t(0, 1, 1).is_zero());
}

TEST(ChangeBasis, PreLieRoundTripAndRestriction) {
  PreLieProduct x = cat::su2_star_xi();
  Matrix p = cat::su2_real_form_basis();
  PreLieProduct y = change_basis(x, p, {"t", "x1", "x2"});
  PreLieProduct back = change_basis(y, inverse(p), x.basis_names);
  EXPECT_EQ(back.xi, x.xi);
  PreLieProduct sub = restrict_to(y, {1, 0});
  EXPECT_EQ(sub.xi, cat::b1(-2).xi);
  EXPECT_THROW(restrict_to(cat::b4(), {0}), PreconditionError);
}

TEST(Commutative, StarProducts) {
  EXPECT_TRUE(check_commutative(cat::cotangent_family2().star).ok);
  EXPECT_TRUE(check_associative(cat::cotangent_family2().star).ok);
  EXPECT_FALSE(check_commutative(cat::b4()).ok);
  EXPECT_FALSE(check_associative(cat::b4()).ok);
}
