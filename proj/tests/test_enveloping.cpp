#include <gtest/gtest.h>

#include <random>

#include "plk/catalog.hpp"
#include "plk/enveloping.hpp"

using namespace plk;
namespace cat = plk::catalog;

namespace {

const LambdaScalar L = LambdaScalar::lambda();

using Mat2 = std::vector<std::vector<Scalar>>;

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  std::size_t n = a.size();
  Mat2 c(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Evaluate an element in a matrix representation of U_lambda(m) at a fixed
// numeric lambda.
Mat2 represent(const NCElement& e, const std::vector<Mat2>& gens, const Scalar& lam) {
  std::size_t n = gens[0].size();
  Mat2 out(n, std::vector<Scalar>(n));
  for (const auto& [w, c] : e.terms()) {
    Mat2 p(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
    for (auto g : w) p = mat_mul(p, gens[g]);
    Scalar cv = c.eval(lam);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += cv * p[i][j];
  }
  return out;
}

// x -> E12, t -> lam E22 gives xt - tx = lam x.
std::vector<Mat2> rep_b(const Scalar& lam) { return {{{0, 1}, {0, 0}}, {{0, 0}, {0, lam}}}; }

// e_k -> lam (-i/2) sigma_k.
std::vector<Mat2> rep_su2(const Scalar& lam) {
  Scalar h = Scalar(make_rational(1, 2)) * lam, I = Scalar::i();
  return {{{0, -I * h}, {-I * h, 0}}, {{0, -h}, {h, 0}}, {{-I * h, 0}, {0, I * h}}};
}

Word random_word(std::mt19937& rng, std::size_t dim, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), g(0, dim - 1);
  Word w(len(rng));
  for (auto& a : w) a = g(rng);
  return w;
}

std::vector<std::pair<std::string, EnvelopingCalculus>> family_calculi() {
  std::vector<std::pair<std::string, EnvelopingCalculus>> out;
  for (auto a : {-2, 0, 1, 3}) out.emplace_back("b1_" + std::to_string(a), EnvelopingCalculus(cat::lie_b(), cat::b1(a)));
  for (auto b : {1, 2}) out.emplace_back("b2_" + std::to_string(b), EnvelopingCalculus(cat::lie_b(), cat::b2(b)));
  out.emplace_back("b3", EnvelopingCalculus(cat::lie_b(), cat::b3()));
  out.emplace_back("b4", EnvelopingCalculus(cat::lie_b(), cat::b4()));
  out.emplace_back("b5", EnvelopingCalculus(cat::lie_b(), cat::b5()));
  return out;
}

EnvelopingCalculus su2_calculus() {
  LieBialgebra b = cat::su2_chevalley();
  return EnvelopingCalculus(dual_lie_algebra(b), cat::su2_star_xi());
}

}  // namespace

TEST(NormalForm, Examples) {
  LieAlgebra b = cat::lie_b();
  EXPECT_EQ(normal_form({0, 0, 1}, b), NCElement::word({0, 0, 1}));
  EXPECT_EQ(normal_form(Word{}, b), NCElement::one());
  EXPECT_EQ(normal_form({1, 0}, b), NCElement::word({0, 1}) - NCElement::word({0}, L));
  LieAlgebra su2 = cat::su2_standard().algebra;
  EXPECT_EQ(normal_form({1, 0}, su2), NCElement::word({0, 1}) - NCElement::word({2}, L));
  // t x x = x x t - 2 lam x x
  EXPECT_EQ(normal_form({1, 0, 0}, b), NCElement::word({0, 0, 1}) - NCElement::word({0, 0}, L * LambdaScalar(2)));
}

TEST(NormalForm, StrategiesAgree) {
  std::mt19937 rng(5);
  LieAlgebra b = cat::lie_b(), su2 = cat::su2_standard().algebra;
  for (int trial = 0; trial < 200; ++trial) {
    const LieAlgebra& m = trial % 2 ? b : su2;
    Word w = random_word(rng, m.dim, 6);
    NCElement l = normal_form(w, m, RewriteStrategy::leftmost), r = normal_form(w, m, RewriteStrategy::rightmost);
    EXPECT_EQ(l, r);
    EXPECT_TRUE(l.is_normal());
  }
}

TEST(NormalForm, AgreesWithMatrixRepresentation) {
  std::mt19937 rng(6);
  Scalar lam(3);
  LieAlgebra b = cat::lie_b(), su2 = cat::su2_standard().algebra;
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_word(rng, 2, 6);
    EXPECT_EQ(represent(NCElement::word(w), rep_b(lam), lam), represent(normal_form(w, b), rep_b(lam), lam));
    Word v = random_word(rng, 3, 5);
    EXPECT_EQ(represent(NCElement::word(v), rep_su2(lam), lam), represent(normal_form(v, su2), rep_su2(lam), lam));
  }
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega_word({0}, cat::b1(3)), (Vec{1, 0}));
  EXPECT_EQ(omega_word({0, 1}, cat::b1(3)), (Vec{1, 0}));
  EXPECT_EQ(omega_word({1, 1}, cat::b1(3)), (Vec{0, -3}));
  EXPECT_THROW(omega_word({}, cat::b1(3)), std::invalid_argument);
}

TEST(Differential, Examples) {
  EnvelopingCalculus c(cat::lie_b(), cat::b1(3));
  EXPECT_TRUE(c.d(NCElement::one()).is_zero());
  EXPECT_EQ(c.d(NCElement::word({1})), FormElement::term({}, {1}));
  FormElement expect = FormElement::term({0}, {1}) + FormElement::term({1}, {0}) + FormElement::term({}, {0}, L);
  EXPECT_EQ(c.d(NCElement::word({0, 1})), expect);
  EXPECT_EQ(c.d(NCElement::word({0, 1})).grade(), 1u);
  // d(tx) = d(xt - lam x)
  EXPECT_EQ(c.d(NCElement::word({1, 0})), FormElement::term({0}, {1}) + FormElement::term({1}, {0}));
}

TEST(Differential, ClassicalWhenAbelian) {
  LieAlgebra ab = abelian_lie_algebra({"a", "b"});
  EnvelopingCalculus c(ab, zero_prelie({"a", "b"}));
  EXPECT_EQ(c.d(NCElement::word({0, 0})), FormElement::term({0}, {0}, 2));
  EXPECT_TRUE(check_first_order(ab, zero_prelie({"a", "b"}), 3).ok());
  EXPECT_TRUE(check_exterior(c, 3).ok());
}

TEST(Bimodule, CommutationWithForms) {
  // b4: [x,dx] = lam dt, [t,dx] = -lam dx
  EnvelopingCalculus c(cat::lie_b(), cat::b4());
  FormElement x = FormElement::term({0}, {}), t = FormElement::term({1}, {}), dx = FormElement::term({}, {0});
  EXPECT_EQ(c.multiply(x, dx) - c.multiply(dx, x), FormElement::term({}, {1}, L));
  EXPECT_EQ(c.multiply(t, dx) - c.multiply(dx, t), FormElement::term({}, {0}, -L));
  // Forms anticommute among themselves.
  FormElement dt = FormElement::term({}, {1});
  EXPECT_EQ(c.multiply(dx, dt), FormElement::term({}, {0, 1}));
  EXPECT_EQ(c.multiply(dt, dx), FormElement::term({}, {0, 1}, -1));
  EXPECT_TRUE(c.multiply(dx, dx).is_zero());
}

TEST(Exterior, Examples) {
  EnvelopingCalculus c(cat::lie_b(), cat::b2(1));
  EXPECT_TRUE(c.d(FormElement::term({}, {0})).is_zero());
  EXPECT_EQ(c.d(FormElement::term({0}, {1})), FormElement::term({}, {0, 1}));
  for (const auto& [id, calc] : family_calculi()) EXPECT_TRUE(calc.d(calc.d(NCElement::word({0, 1}))).is_zero()) << id;
}

TEST(FirstOrder, B2BetaOne) {
  Report r = check_first_order(cat::lie_b(), cat::b2(1), 3);
  EXPECT_TRUE(r.ok()) << r.describe();
}

TEST(FirstOrder, FamiliesAndSu2) {
  for (const auto& [id, calc] : family_calculi()) EXPECT_TRUE(check_first_order(calc.lie(), calc.prelie(), 4).ok()) << id;
  EnvelopingCalculus s = su2_calculus();
  Report r = check_first_order(s.lie(), s.prelie(), 3);
  EXPECT_TRUE(r.ok()) << r.describe();
}

TEST(FirstOrder, BrokenLeftSymmetryIsWitnessed) {
  LieAlgebra b = cat::lie_b();
  PreLieProduct x = cat::b1(1);
  x.xi.add({0, 0, 0}, 1);  // symmetric perturbation keeps compatibility
  ASSERT_FALSE(check_left_symmetry(x).ok);
  EXPECT_THROW(EnvelopingCalculus(b, x), PreconditionError);
  Report r = check_first_order(b, x, 3);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.get("well_defined").ok && r.get("leibniz").ok);
  EXPECT_FALSE(r.get("well_defined").witnesses.empty() && r.get("leibniz").witnesses.empty());
  EXPECT_THROW(check_first_order(b, make_prelie({"x", "t"}, {{0, 1, 0, 2}}), 2), PreconditionError);
}

TEST(Exterior, FamiliesPassAtLengthFour) {
  for (const auto& [id, calc] : family_calculi()) {
    Report r = check_exterior(calc, 4);
    EXPECT_TRUE(r.ok()) << id << r.describe();
  }
  Report r = check_exterior(su2_calculus(), 3);
  EXPECT_TRUE(r.ok()) << r.describe();
}

TEST(Kernel, Connected) {
  EnvelopingCalculus c(cat::lie_b(), cat::b1(3));
  EXPECT_EQ(kernel_of_d(c, 0, 1).dimension, 1u);
  EXPECT_EQ(kernel_of_d(c, 3, 1).dimension, 1u);
  EXPECT_EQ(kernel_of_d(EnvelopingCalculus(cat::lie_b(), cat::b4()), 4, 1).dimension, 1u);
  KernelResult k = kernel_of_d(su2_calculus(), 3, 1);
  ASSERT_EQ(k.dimension, 1u);
  // the kernel is spanned by 1
  for (std::size_t j = 1; j < k.pbw_basis.size(); ++j) EXPECT_TRUE(k.basis[0][j].is_zero());
  EXPECT_THROW(kernel_of_d(c, 2, 0), std::invalid_argument);
}

TEST(Kernel, PbwCounts) {
  EXPECT_EQ(pbw_words(2, 4).size(), 15u);
  EXPECT_EQ(pbw_words(3, 3).size(), 20u);
  EXPECT_EQ(all_words(3, 2).size(), 9u);
}

TEST(Exterior, BrokenLeftSymmetryBreaksAssociativity) {
  PreLieProduct x = cat::b1(1);
  x.xi.add({0, 0, 0}, 1);
  Report r = check_exterior(EnvelopingCalculus::unchecked(cat::lie_b(), x), 3);
  EXPECT_FALSE(r.get("associative").ok);
}
