#include <gtest/gtest.h>

#include <random>

#include "plk/catalog.hpp"
#include "plk/enveloping.hpp"
#include "plk/metric.hpp"

using namespace plk;
namespace cat = plk::catalog;

namespace {

const LambdaScalar L = LambdaScalar::lambda();
using LE = LocalizedElement;

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Laurent-type representation: x acts as multiplication by z, t as -lam z d/dz.
// Elements act on finite sums of z^k with k rational.
using ZSum = std::map<Rational, LambdaScalar>;

ZSum act(const LE& f, const ZSum& h) {
  ZSum out;
  for (const auto& [m, c] : f.poly().terms())
    for (const auto& [k, hk] : h) {
      LambdaScalar v = c * hk;
      for (unsigned b = 0; b < m.texp; ++b) v *= LambdaScalar(Scalar(-k)) * L;
      Rational e = m.xexp + k;
      out[e] += v;
      if (out[e].is_zero()) out.erase(e);
    }
  return out;
}

LE random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> xe(-8, 8), te(0, 3), co(-3, 3), n(1, 3);
  LE f;
  for (int k = n(rng); k > 0; --k) f += LE::monomial(LambdaScalar(co(rng)) + L * LambdaScalar(co(rng)), q(xe(rng), 2), te(rng));
  return f;
}

OneForm random_form(std::mt19937& rng) {
  OneForm w;
  w.c[0] = random_element(rng);
  w.c[1] = random_element(rng);
  return w;
}

// Normal-ordered element written back in the input syntax.
std::string to_expr(const LE& f) {
  std::string s;
  for (const auto& [m, c] : f.poly().terms())
    for (unsigned k = 0; k <= c.degree(); ++k) {
      Scalar v = c.coeff(k);
      if (v.is_zero()) continue;
      std::string coef = rational_str(v.re() < 0 ? Rational(-v.re()) : v.re());
      s += v.re() < 0 ? " - " : " + ";
      s += coef;
      for (unsigned j = 0; j < k; ++j) s += "*lam";
      s += "*x^(" + rational_str(m.xexp) + ")*t^" + std::to_string(m.texp);
    }
  return s.empty() ? "0" : s;
}

std::vector<LocalizedCalculus> family_calculi() {
  std::vector<LocalizedCalculus> out;
  for (auto id : {"b1(-2)", "b1(3)", "b1(1/2)", "b2(1)", "b2(2)", "b2(-3/2)", "b4", "b5"}) out.push_back(localized_calculus(id));
  return out;
}

// PBW word x^a t^b.
Word pbw(unsigned a, unsigned b) {
  Word w(a, 0);
  w.insert(w.end(), b, 1);
  return w;
}

OneForm from_enveloping(const FormElement& f) {
  OneForm w;
  for (const auto& [key, c] : f.terms()) {
    const auto& [u, forms] = key;
    unsigned a = 0, b = 0;
    for (auto g : u) (g == 0 ? a : b)++;
    EXPECT_EQ(u, pbw(a, b));
    EXPECT_EQ(forms.size(), 1u);
    w.c[forms[0]] += LE::monomial(c, a, b);
  }
  return w;
}

}  // namespace

TEST(Localized, ProductMatchesRepresentation) {
  std::mt19937 rng(11);
  ZSum probe{{0, 1}, {1, 1}, {q(-3), 2}, {q(1, 2), 1}};
  for (int trial = 0; trial < 200; ++trial) {
    LE f = random_element(rng), g = random_element(rng);
    EXPECT_EQ(act(f * g, probe), act(f, act(g, probe)));
  }
}

TEST(Localized, PowerRuleInductionOracle) {
  // t x^a by repeated use of t x = x t - lam x and t x^-1 = x^-1 t + lam x^-1.
  LE t = LE::t_pow(1);
  for (int a = -4; a <= 4; ++a) {
    LE expect = t;  // t x^0
    LE step = a >= 0 ? LE::x_pow(1) : LE::x_pow(-1);
    for (int k = 0; k < std::abs(a); ++k) expect = expect * step;
    EXPECT_EQ(t * LE::x_pow(a), LE::x_pow(a) * t - LambdaScalar(a) * L * LE::x_pow(a));
    EXPECT_EQ(expect, LE::x_pow(a) * t - LambdaScalar(a) * L * LE::x_pow(a));
  }
}

TEST(Localized, Examples) {
  NormalOrdered a = normal_order_localized("x*dx", "b1(3)");
  EXPECT_EQ(a.grade, 1u);
  OneForm xdx;
  xdx.c[0] = LE::x_pow(1);
  EXPECT_EQ(a.form, xdx);
  NormalOrdered b = normal_order_localized("t*x^-1", "b1(-2)");
  EXPECT_EQ(b.grade, 0u);
  EXPECT_EQ(b.function, LE::monomial(1, -1, 1) + L * LE::x_pow(-1));
  // b4: [x, dx] = lam dt and x o t = 0, so dx x^-2 = x^-2 dx + 2 lam x^-3 dt, dt x^-2 = x^-2 dt.
  NormalOrdered c = normal_order_localized("dx*x^-2", "b4");
  OneForm expect;
  expect.c[0] = LE::x_pow(-2);
  expect.c[1] = LambdaScalar(2) * L * LE::x_pow(-3);
  EXPECT_EQ(c.form, expect);
  EXPECT_EQ(normal_order_localized("dt*x^-2", "b4").form, normal_order_localized("x^-2 dt", "b4").form);
  // [t, dt] = lam d(t o t) = -2 lam dt
  OneForm dtt;
  dtt.c[1] = LE::t_pow(1) + LambdaScalar(2) * L;
  EXPECT_EQ(normal_order_localized("dt t", "b4").form, dtt);
  EXPECT_EQ(normal_order_localized("x^(1/2) x^(1/2) - x", "b5").function, LE());
}

TEST(Localized, Idempotent) {
  std::mt19937 rng(12);
  for (const auto& calc : family_calculi()) {
    for (int trial = 0; trial < 10; ++trial) {
      LE f = random_element(rng);
      EXPECT_EQ(normal_order_localized(to_expr(f), calc).function, f);
    }
  }
}

TEST(Localized, FormsAgreeWithEnvelopingCalculus) {
  for (auto [id, xi] : std::vector<std::pair<std::string, PreLieProduct>>{
           {"b1(-2)", cat::b1(-2)}, {"b1(3)", cat::b1(3)}, {"b2(1)", cat::b2(1)}, {"b2(2)", cat::b2(2)},
           {"b4", cat::b4()}, {"b5", cat::b5()}}) {
    LocalizedCalculus calc = localized_calculus(id);
    EnvelopingCalculus env(cat::lie_b(), xi);
    for (std::size_t j = 0; j < 2; ++j)
      for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; b <= 3; ++b) {
          FormElement prod = env.multiply(FormElement::term({}, {j}), FormElement::term(pbw(a, b), {}));
          EXPECT_EQ(calc.right_mul(OneForm::basis(j), LE::monomial(1, a, b)), from_enveloping(prod))
              << id << " " << j << " " << a << " " << b;
        }
  }
}

TEST(Localized, NegativeAndRationalPowersConsistent) {
  std::mt19937 rng(13);
  for (const auto& calc : family_calculi()) {
    for (std::size_t j = 0; j < 2; ++j)
      for (int n = 1; n <= 4; ++n) {
        OneForm w = calc.right_mul(OneForm::basis(j), LE::x_pow(-n));
        EXPECT_EQ(calc.right_mul(w, LE::x_pow(n)), OneForm::basis(j)) << calc.id();
      }
    for (int trial = 0; trial < 10; ++trial) {
      OneForm w = random_form(rng);
      LE f = random_element(rng), g = random_element(rng);
      EXPECT_EQ(calc.right_mul(calc.right_mul(w, f), g), calc.right_mul(w, f * g)) << calc.id();
      EXPECT_EQ(calc.right_mul(calc.left_mul(f, w), g), calc.left_mul(f, calc.right_mul(w, g)));
    }
  }
}

TEST(Localized, Errors) {
  EXPECT_THROW(normal_order_localized("ln x * dx", "b1(1)"), UnsupportedFunction);
  EXPECT_THROW(normal_order_localized("sin x", "b1(1)"), UnsupportedFunction);
  EXPECT_THROW(normal_order_localized("t^(1/2)", "b1(1)"), UnsupportedFunction);
  EXPECT_THROW(normal_order_localized("dx dt", "b1(1)"), std::invalid_argument);
  EXPECT_THROW(normal_order_localized("x + dx", "b1(1)"), std::invalid_argument);
  EXPECT_THROW(normal_order_localized("x @ dx", "b1(1)"), std::invalid_argument);
  EXPECT_THROW(normal_order_localized("x^", "b1(1)"), std::invalid_argument);
  EXPECT_THROW(normal_order_localized("", "b1(1)"), std::invalid_argument);
  EXPECT_THROW(localized_calculus("b7"), std::invalid_argument);
  EXPECT_THROW(localized_calculus("b1(1/0)"), std::invalid_argument);
  try {
    localized_calculus("b3");
    FAIL();
  } catch (const UnsupportedFunction& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("case 3"), std::string::npos);
    EXPECT_NE(msg.find("alpha = -1"), std::string::npos);
  }
  EXPECT_THROW(central_forms(3), UnsupportedFunction);
  EXPECT_EQ(localized_calculus("b1_1_2").id(), "b1(1/2)");
}

TEST(Star, Involution) {
  std::mt19937 rng(14);
  for (const auto& calc : family_calculi()) {
    for (int trial = 0; trial < 5; ++trial) {
      OneForm w = random_form(rng);
      EXPECT_EQ(calc.star(calc.star(w)), w);
      EXPECT_EQ(calc.star(LambdaScalar(Scalar::i()) * w), LambdaScalar(-Scalar::i()) * calc.star(w));
      FormTensor g = calc.tensor(w, random_form(rng));
      EXPECT_EQ(calc.star(calc.star(g)), g);
      LE f = random_element(rng);
      EXPECT_EQ(f.star().star(), f);
      LE g2 = random_element(rng);
      EXPECT_EQ((f * g2).star(), g2.star() * f.star());
    }
  }
}

TEST(Star, CentralFormStars) {
  auto check = [](int case_no, const Rational& p, const LambdaScalar& shift) {
    CentralForms f = central_forms(case_no, p);
    LocalizedCalculus calc = localized_calculus(f.calculus_id);
    EXPECT_EQ(star_form(f.u, calc), f.u) << case_no;
    EXPECT_EQ(star_form(f.v, calc), f.v + shift * f.u) << case_no << " " << rational_str(p);
  };
  check(1, -2, 0);
  check(1, q(1, 3), 0);
  for (Rational b : {q(1), q(2), q(3), q(1, 2), q(-1)}) check(2, b, LambdaScalar(Scalar(b * (b - 2))) * L);
  check(4, 0, LambdaScalar(-3) * L);
  check(5, 0, -L);
}

TEST(Star, CentralFormsAreCentral) {
  for (auto [c, p] : std::vector<std::pair<int, Rational>>{{1, -2}, {1, q(5, 2)}, {2, 1}, {2, 3}, {4, 0}, {5, 0}}) {
    CentralForms f = central_forms(c, p);
    LocalizedCalculus calc = localized_calculus(f.calculus_id);
    for (const OneForm& w : {f.u, f.v})
      for (const LE& g : {LE::x_pow(1), LE::t_pow(1)}) EXPECT_EQ(calc.left_mul(g, w), calc.right_mul(w, g)) << c;
  }
}

TEST(Metric, CaseOneExample) {
  MetricCandidate m = standard_metric(1, -2, 1, 0, 1);
  FormTensor expect;
  expect.c[0][0] = LE::x_pow(-2);
  expect.c[1][1] = LE::x_pow(-4);
  EXPECT_EQ(m.g, expect);
  Report r = check_metric(m);
  EXPECT_TRUE(r.ok()) << r.describe();
  EXPECT_EQ(r.checks.size(), 4u);
}

TEST(Metric, StandardFormsPassAllChecks) {
  std::vector<std::array<Scalar, 3>> cs = {{1, 0, 1}, {2, 0, -3}, {Scalar(q(1, 2)), 0, 5}, {1, 1, 2}, {3, -2, Scalar(q(1, 3))}};
  std::vector<std::pair<int, Rational>> cases = {{1, -2}, {1, 1}, {1, q(1, 2)}, {1, 3},  {2, 1}, {2, 2},
                                                 {2, 3},  {2, q(-1, 2)}, {4, 0}, {5, 0}};
  for (auto [c, p] : cases)
    for (const auto& cc : cs) {
      Report r = check_metric(standard_metric(c, p, cc[0], cc[1], cc[2]));
      EXPECT_TRUE(r.ok()) << c << " " << rational_str(p) << r.describe();
    }
}

TEST(Metric, ExpandedStandardForms) {
  // Case 2, beta = 2, c = (c1, 0, c3) with c1 = 3, c3 = 5.
  Rational b = 2;
  Scalar c1 = 3, c3 = 5;
  MetricCandidate m = standard_metric(2, b, c1, 0, c3);
  LambdaScalar b2 = Scalar(b * b);
  LE e00 = LE::monomial(LambdaScalar(c1) + LambdaScalar(c3) * b2 * (L * L) * Scalar(b * b - 3 * b + 3), 2 * b - 2, 0) +
           LE::monomial(LambdaScalar(c3) * b2, 2 * b - 2, 2) -
           LE::monomial(LambdaScalar(c3) * b2 * L * Scalar(2 * b - 3), 2 * b - 2, 1);
  // The cross term is -c3 x^(2b-1) (b t - lam b (b - 1)).
  LE e01 = -LE::monomial(LambdaScalar(c3) * Scalar(b), 2 * b - 1, 1) + LE::monomial(LambdaScalar(c3) * L * Scalar(b * (b - 1)), 2 * b - 1, 0);
  EXPECT_EQ(m.g.c[0][0], e00);
  EXPECT_EQ(m.g.c[0][1], e01);
  EXPECT_EQ(m.g.c[1][0], e01);
  EXPECT_EQ(m.g.c[1][1], LE::monomial(c3, 2 * b, 0));

  // Case 5.
  MetricCandidate m5 = standard_metric(5, 0, c1, 0, c3);
  LE x = LE::x_pow(1), t = LE::t_pow(1);
  LE f00 = LambdaScalar(c1) + LambdaScalar(c3) * (t * t - (LambdaScalar(2) * (x * t) - L * t) + x * x + L * L);
  EXPECT_EQ(m5.g.c[0][0], f00);
  EXPECT_EQ(m5.g.c[0][1], LambdaScalar(c3) * (x * x - x * t));
  EXPECT_EQ(m5.g.c[1][0], m5.g.c[0][1]);
  EXPECT_EQ(m5.g.c[1][1], LambdaScalar(c3) * (x * x));

  // Case 4: the dt(x)dt coefficient carries 7 lam^2 c3, a shift of c1 against the displayed 1.
  MetricCandidate m4 = standard_metric(4, 0, c1, 0, c3);
  EXPECT_EQ(m4.g.c[0][0], LambdaScalar(c3) * LE::x_pow(-2));
  EXPECT_EQ(m4.g.c[0][1], -LambdaScalar(c3) * (LE::monomial(1, -3, 1) + LambdaScalar(2) * L * LE::x_pow(-3)));
  LE g11 = LE::monomial(LambdaScalar(c1) + LambdaScalar(c3) * LambdaScalar(7) * L * L, -4, 0) +
           LE::monomial(LambdaScalar(c3) * LambdaScalar(5) * L, -4, 1) + LE::monomial(c3, -4, 2);
  EXPECT_EQ(m4.g.c[1][1], g11);
  MetricCandidate shifted = m4;
  shifted.g.c[1][1] -= LE::monomial(LambdaScalar(c3) * LambdaScalar(6) * L * L, -4, 0);
  EXPECT_TRUE(check_metric(shifted).ok());
}

TEST(Metric, FailingChecks) {
  Report r = check_metric(standard_metric(5, 0, 1, 0, 0));
  EXPECT_FALSE(r.get("nondegenerate").ok);
  EXPECT_TRUE(r.get("central").ok && r.get("wedge_symmetric").ok && r.get("real").ok);

  MetricCandidate anti{"b1(1)", {}};
  anti.g.c[0][1] = 1;
  anti.g.c[1][0] = -1;
  Report w = check_metric(anti);
  EXPECT_FALSE(w.get("wedge_symmetric").ok);
  EXPECT_NE(w.get("wedge_symmetric").note.find("(2)"), std::string::npos);

  Report c = check_metric(standard_metric(1, 1, Scalar::i(), 0, 1));
  EXPECT_FALSE(c.get("real").ok);
  EXPECT_TRUE(c.get("central").ok);

  MetricCandidate nc{"b4", {}};
  nc.g.c[0][0] = 1;
  nc.g.c[1][1] = 1;
  Report n = check_metric(nc);
  EXPECT_FALSE(n.get("central").ok);
  EXPECT_FALSE(n.get("central").witnesses.empty());
}

TEST(Metric, CentralityInvariantUnderShift) {
  for (auto [c, p] : std::vector<std::pair<int, Rational>>{{1, 2}, {2, 1}, {2, 3}, {4, 0}, {5, 0}}) {
    MetricCandidate m = standard_metric(c, p, 2, 1, 3);
    for (Scalar s : {Scalar(1), Scalar(-2), Scalar(q(1, 3))}) {
      Report r = check_metric(shift_t(m, s));
      EXPECT_TRUE(r.get("central").ok) << c;
      EXPECT_TRUE(r.ok()) << c << r.describe();
    }
  }
  // t -> t + c2/(beta c3) removes c2 at the cost of c1 -> c1 - c2^2/c3 in case 2.
  Rational b = 3;
  MetricCandidate m = shift_t(standard_metric(2, b, 2, 1, 3), Scalar(Rational(1) / (b * 3)));
  EXPECT_EQ(m.g, standard_metric(2, b, Scalar(q(5, 3)), 0, 3).g);
}

TEST(Curvature, Examples) {
  EXPECT_TRUE(scalar_curvature_2d(1, 0, 1).scalar_curvature.is_zero());
  CurvatureResult h = scalar_curvature_classical(standard_metric(1, 1, 1, 0, 1));
  EXPECT_TRUE(ratfunc_equal(h.scalar_curvature, RatFunc(-2))) << h.scalar_curvature.str();
  // round sphere d theta^2 + sin^2 has no polynomial form; use the upper half plane dx^2 + dt^2 over x^2
  CurvatureResult hp = scalar_curvature_2d(GenPoly::x_pow(-2), 0, GenPoly::x_pow(-2));
  EXPECT_TRUE(ratfunc_equal(hp.scalar_curvature, RatFunc(-2)));
  CurvatureResult c5 = scalar_curvature_classical(standard_metric(5, 0, 1, 0, 1));
  EXPECT_TRUE(ratfunc_equal(c5.scalar_curvature, RatFunc(GenPoly::term(-4, -2, 0)))) << c5.scalar_curvature.str();
  EXPECT_THROW(scalar_curvature_2d(1, 1, 1), PreconditionError);
}

namespace {

RatFunc constant(const Scalar& s) { return RatFunc(GenPoly(s)); }

}  // namespace

TEST(Curvature, CaseFormulas) {
  const GenPoly x = GenPoly::x(), t = GenPoly::t();
  std::vector<std::array<Scalar, 3>> cs = {{1, 0, 1}, {2, 0, -3}, {Scalar(q(1, 2)), 0, 5}, {-1, 0, Scalar(q(2, 3))}};
  for (const auto& c : cs) {
    for (Rational a : {q(1), q(-2), q(1, 2), q(3)}) {
      Scalar c2 = c[0] == Scalar(1) ? Scalar(0) : Scalar(q(1, 4));
      Scalar det = c[0] * c[2] - c2 * c2;
      RatFunc R = scalar_curvature_classical(standard_metric(1, a, c[0], c2, c[2])).scalar_curvature;
      EXPECT_TRUE(ratfunc_equal(R, constant(Scalar(-2 * a * a) * c[2] / det))) << R.str();
    }
    for (Rational b : {q(1), q(2), q(3), q(1, 2)}) {
      RatFunc R = scalar_curvature_classical(standard_metric(2, b, c[0], 0, c[2])).scalar_curvature;
      // Classical limit of the (u,v) form: F = -b c3 x^(2b-1) t and R = -4 b^2 / (c1 x^(2b)).
      RatFunc computed(GenPoly::term(LambdaScalar(Scalar(-4 * b * b) / c[0]), -2 * b, 0));
      EXPECT_TRUE(ratfunc_equal(R, computed)) << rational_str(b) << " " << R.str();
      // The closed form below belongs to the components with F = -c3 x^(2b-1) t; the two agree at b = 1.
      GenPoly den = GenPoly(c[0]) + GenPoly(c[2] * Scalar(b * b - 1)) * t * t;
      RatFunc closed(GenPoly::term(LambdaScalar(Scalar(-2 * b * (b + 1)) * c[0]), -2 * b, 0), den * den);
      GenPoly E = GenPoly::term(1, 2 * b - 2, 0) * (GenPoly(c[0]) + GenPoly(c[2] * Scalar(b * b)) * t * t);
      GenPoly F = GenPoly::term(LambdaScalar(-c[2]), 2 * b - 1, 1), G = GenPoly::term(c[2], 2 * b, 0);
      EXPECT_TRUE(ratfunc_equal(scalar_curvature_2d(E, F, G).scalar_curvature, closed)) << rational_str(b);
      EXPECT_EQ(ratfunc_equal(R, closed), b == 1) << rational_str(b);
    }
    RatFunc R4 = scalar_curvature_classical(standard_metric(4, 0, c[0], 0, c[2])).scalar_curvature;
    RatFunc expect4 = RatFunc((x * x - GenPoly(2) * t * t) * Scalar(4) * (Scalar(1) / c[0])) - constant(Scalar(8) / c[2]);
    EXPECT_TRUE(ratfunc_equal(R4, expect4)) << R4.str();
    RatFunc R5 = scalar_curvature_classical(standard_metric(5, 0, c[0], 0, c[2])).scalar_curvature;
    EXPECT_TRUE(ratfunc_equal(R5, RatFunc(GenPoly::term(LambdaScalar(Scalar(-4) / c[0]), -2, 0))));
  }
}
