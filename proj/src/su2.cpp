#include "plk/su2.hpp"

#include <sstream>
#include <stdexcept>

#include "plk/catalog.hpp"

namespace plk {

namespace {

Rational binom(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

const LambdaScalar kLam = LambdaScalar::lambda();
const Scalar kI = Scalar::i();
const Scalar kHalf = Scalar(make_rational(1, 2));

}  // namespace

SL2Poly::SL2Poly(const LambdaScalar& c) {
  if (!c.is_zero()) terms_[SL2Mono{0, 0, 0, 0}] = c;
}

SL2Poly SL2Poly::monomial(const LambdaScalar& c, const SL2Mono& m) {
  SL2Poly p;
  p.add_reduced(m, c);
  return p;
}

void SL2Poly::add_reduced(const SL2Mono& m, const LambdaScalar& c) {
  if (c.is_zero()) return;
  unsigned k = std::min(m[0], m[3]);
  // (ad)^k = (1 + bc)^k
  for (unsigned r = 0; r <= k; ++r) {
    SL2Mono n{m[0] - k, m[1] + r, m[2] + r, m[3] - k};
    LambdaScalar v = c * Scalar(binom(k, r));
    auto [it, inserted] = terms_.try_emplace(n, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

SL2Poly SL2Poly::operator-() const {
  SL2Poly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

SL2Poly& SL2Poly::operator+=(const SL2Poly& o) {
  for (const auto& [m, c] : o.terms_) add_reduced(m, c);
  return *this;
}

SL2Poly& SL2Poly::operator-=(const SL2Poly& o) {
  for (const auto& [m, c] : o.terms_) add_reduced(m, -c);
  return *this;
}

SL2Poly operator*(const SL2Poly& x, const SL2Poly& y) {
  SL2Poly out;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_)
      out.add_reduced({mx[0] + my[0], mx[1] + my[1], mx[2] + my[2], mx[3] + my[3]}, cx * cy);
  return out;
}

LambdaScalar SL2Poly::counit() const {
  LambdaScalar s;
  for (const auto& [m, c] : terms_)
    if (m[1] == 0 && m[2] == 0) s += c;
  return s;
}

std::string SL2Poly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[4] = {"a", "b", "c", "d"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int g = 0; g < 4; ++g)
      if (m[g]) os << "*" << names[g] << (m[g] > 1 ? "^" + std::to_string(m[g]) : "");
  }
  return os.str();
}

LambdaOneForm omega_A(const SL2Poly& p) {
  if (!p.counit().is_zero()) throw std::invalid_argument("omega_A needs a counit-free element");
  LambdaOneForm w;
  for (const auto& [m, c] : p.terms()) {
    if (m[1] == 0 && m[2] == 0) {
      // d/da - d/dd at the identity
      w[0] += c * Scalar(long(m[0]) - long(m[3]));
    } else if (m[1] == 1 && m[2] == 0) {
      w[1] += c;
    } else if (m[1] == 0 && m[2] == 1) {
      w[2] += c;
    }
  }
  return w;
}

SL2Matrix sl2_mul(const SL2Matrix& x, const SL2Matrix& y) {
  SL2Matrix z;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return z;
}

namespace {

SL2Matrix t_matrix() { return {{{SL2Poly::a(), SL2Poly::b()}, {SL2Poly::c(), SL2Poly::d()}}}; }
SL2Matrix t_inverse() { return {{{SL2Poly::d(), -SL2Poly::b()}, {-SL2Poly::c(), SL2Poly::a()}}}; }

// e_k = -(i/2) sigma_k
SL2Matrix su2_e(std::size_t k) {
  Scalar h = -(kI * kHalf);
  switch (k) {
    case 0: return {{{0, h}, {h, 0}}};
    case 1: return {{{0, -(h * kI)}, {h * kI, 0}}};
    default: return {{{h, 0}, {0, -h}}};
  }
}

SL2Matrix scale(const LambdaScalar& s, const SL2Matrix& m) {
  SL2Matrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = SL2Poly(s) * m[i][j];
  return out;
}

SL2Matrix mat_add(const SL2Matrix& x, const SL2Matrix& y, int sign = 1) {
  SL2Matrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = sign > 0 ? x[i][j] + y[i][j] : x[i][j] - y[i][j];
  return out;
}

SL2Matrix poly_scale(const SL2Poly& p, const SL2Matrix& m) {
  SL2Matrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = p * m[i][j];
  return out;
}

SL2Matrix diag(const SL2Poly& x, const SL2Poly& y) { return {{{x, 0}, {0, y}}}; }

LambdaOneForm form(const LambdaScalar& w0, const LambdaScalar& wp, const LambdaScalar& wm) { return {w0, wp, wm}; }

LambdaOneForm form_add(const LambdaOneForm& x, const LambdaOneForm& y, const LambdaScalar& s = 1) {
  return {x[0] + s * y[0], x[1] + s * y[1], x[2] + s * y[2]};
}

}  // namespace

SL2Matrix su2_cross_relation(std::size_t i) {
  SL2Matrix t = t_matrix(), e3 = su2_e(2), ei = su2_e(i);
  SL2Matrix m = mat_add(sl2_mul(sl2_mul(t_inverse(), e3), t), e3, -1);
  SL2Matrix comm = mat_add(sl2_mul(ei, m), sl2_mul(m, ei), -1);
  return scale(kLam, sl2_mul(t, comm));
}

SL2Matrix su2_cross_relation_expanded(std::size_t i) {
  using P = SL2Poly;
  SL2Matrix t = t_matrix();
  P a = P::a(), b = P::b(), c = P::c(), d = P::d();
  LambdaScalar half_lam = kLam * kHalf;
  switch (i) {
    case 0:  // -lam bc t e_2 + lam/2 t diag(ac, -bd) + lam/2 diag(b, -c)
      return mat_add(mat_add(scale(-kLam, poly_scale(b * c, sl2_mul(t, su2_e(1)))),
                             scale(half_lam, sl2_mul(t, diag(a * c, -(b * d))))),
                     scale(half_lam, diag(b, -c)));
    case 1:  // lam bc t e_1 - (i lam/2) t diag(ac, bd) + (i lam/2) diag(b, c)
      return mat_add(mat_add(scale(kLam, poly_scale(b * c, sl2_mul(t, su2_e(0)))),
                             scale(-(half_lam * kI), sl2_mul(t, diag(a * c, b * d)))),
                     scale(half_lam * kI, diag(b, c)));
    default:  // -lam ad t + lam diag(a, d)
      return mat_add(scale(-kLam, poly_scale(a * d, t)), scale(kLam, diag(a, d)));
  }
}

LambdaOneForm su2_right_action(std::size_t i, const LambdaOneForm& w) {
  LambdaScalar half_lam = kLam * kHalf;
  switch (i) {
    case 0:  // omega^0 <| x^1 = -(lam/2)(omega^+ + omega^-)
      return form(0, -(half_lam * w[0]), -(half_lam * w[0]));
    case 1:  // omega^0 <| x^2 = -(i lam/2)(omega^+ - omega^-)
      return form(0, -(half_lam * kI * w[0]), half_lam * kI * w[0]);
    default:  // omega^+- <| x^3 = lam omega^+-
      return form(0, kLam * w[1], kLam * w[2]);
  }
}

OmegaMatrix su2_expected_omega(std::size_t i) {
  LambdaScalar h = kLam * kHalf;
  switch (i) {
    case 0:
      return {{{form(0, h, h), form(0, 0, 0)}, {form(0, 0, 0), form(0, -h, -h)}}};
    case 1:
      return {{{form(0, h * kI, -(h * kI)), form(0, 0, 0)}, {form(0, 0, 0), form(0, -(h * kI), h * kI)}}};
    default:
      return {{{form(0, 0, 0), form(0, -kLam, 0)}, {form(0, 0, -kLam), form(0, 0, 0)}}};
  }
}

Report verify_su2_bicrossproduct_omega() {
  Report r("su2 bicrossproduct omega");
  Check inv("t_inverse");
  SL2Matrix id = sl2_mul(t_matrix(), t_inverse());
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) inv.require(id[p][q] == SL2Poly(p == q ? 1 : 0), {p, q});

  Check cross("cross_relations"), counit("counit"), expected("omega_matches_expected"), module("module_map");
  const OmegaMatrix omega_t{{{form(1, 0, 0), form(0, 1, 0)}, {form(0, 0, 1), form(-1, 0, 0)}}};
  for (std::size_t i = 0; i < 3; ++i) {
    SL2Matrix rel = su2_cross_relation(i), shown = su2_cross_relation_expanded(i);
    OmegaMatrix want = su2_expected_omega(i);
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q) {
        cross.require(rel[p][q] == shown[p][q], {i, p, q});
        bool free = rel[p][q].counit().is_zero();
        counit.require(free, {i, p, q});
        if (!free) continue;
        LambdaOneForm w = omega_A(rel[p][q]);
        expected.require(w == want[p][q], {i, p, q});
        // omega(x^i t - t x^i) = -omega_A(t - 1) <| x^i
        LambdaOneForm lhs = form_add(form(0, 0, 0), su2_right_action(i, omega_t[p][q]), -1);
        module.require(w == lhs, {i, p, q});
      }
  }
  r.add(inv);
  r.add(cross);
  r.add(counit);
  r.add(expected);
  r.add(module);
  return r;
}

Report verify_su2_semiclassical(const PreLieProduct& xi) {
  Report r("su2* semiclassical pre-Lie");
  r.add(check_left_symmetry(xi)).name = "left_symmetry";
  r.add(check_compatibility(xi, dual_lie_algebra(catalog::su2_chevalley()))).name = "compatibility";

  Matrix p = catalog::su2_real_form_basis();
  Check inv("basis_change_invertible");
  inv.require(matrix_rank(p) == 3, {});
  r.add(inv);
  if (!inv.ok) return r;

  PreLieProduct y = change_basis(xi, p, {"t", "x1", "x2"});
  PreLieProduct want = make_prelie({"t", "x1", "x2"}, {{0, 0, 0, -2}, {0, 1, 1, -1}, {0, 2, 2, -1}});
  Check real("real_form_products");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) real.require(y.xi(i, j, k) == want.xi(i, j, k), {i, j, k});
  r.add(real);

  Check sub("b1_subalgebra");
  try {
    sub.require(restrict_to(y, {1, 0}).xi == catalog::b1(-2).xi, {1, 0});
  } catch (const PreconditionError&) {
    sub.fail({1, 0});
    sub.note = "span{x1, t} is not closed";
  }
  r.add(sub);
  return r;
}

Report verify_su2_semiclassical() { return verify_su2_semiclassical(catalog::su2_star_xi()); }

}  // namespace plk
