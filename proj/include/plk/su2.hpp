#pragma once

#include <array>
#include <map>
#include <string>

#include "plk/check.hpp"
#include "plk/prelie.hpp"

namespace plk {

// Exponents of a^i b^j c^k d^l.
using SL2Mono = std::array<unsigned, 4>;

// Element of C[a,b,c,d]/(ad - bc - 1) over LambdaScalar.  Normal form:
// no monomial has both a and d, reached by (ad)^m -> (1 + bc)^m.
class SL2Poly {
 public:
  using Terms = std::map<SL2Mono, LambdaScalar>;

  SL2Poly() = default;
  SL2Poly(int c) : SL2Poly(LambdaScalar(c)) {}
  SL2Poly(const Scalar& c) : SL2Poly(LambdaScalar(c)) {}
  SL2Poly(const LambdaScalar& c);
  static SL2Poly monomial(const LambdaScalar& c, const SL2Mono& m);
  static SL2Poly a() { return monomial(1, {1, 0, 0, 0}); }
  static SL2Poly b() { return monomial(1, {0, 1, 0, 0}); }
  static SL2Poly c() { return monomial(1, {0, 0, 1, 0}); }
  static SL2Poly d() { return monomial(1, {0, 0, 0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SL2Poly operator-() const;
  SL2Poly& operator+=(const SL2Poly& o);
  SL2Poly& operator-=(const SL2Poly& o);
  friend SL2Poly operator+(SL2Poly x, const SL2Poly& y) { return x += y; }
  friend SL2Poly operator-(SL2Poly x, const SL2Poly& y) { return x -= y; }
  friend SL2Poly operator*(const SL2Poly& x, const SL2Poly& y);
  friend bool operator==(const SL2Poly& x, const SL2Poly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const SL2Poly& x, const SL2Poly& y) { return !(x == y); }

  // a, d -> 1 and b, c -> 0.
  LambdaScalar counit() const;
  std::string str() const;

 private:
  void add_reduced(const SL2Mono& m, const LambdaScalar& c);
  Terms terms_;
};

// Components on (omega^0, omega^+, omega^-).
using LambdaOneForm = std::array<LambdaScalar, 3>;

// Linearisation at the identity: a-1 -> omega^0, d-1 -> -omega^0, b -> omega^+,
// c -> omega^-, zero on products of two counit-free elements.  Throws
// std::invalid_argument when the counit of p is nonzero.
LambdaOneForm omega_A(const SL2Poly& p);

using SL2Matrix = std::array<std::array<SL2Poly, 2>, 2>;
using OmegaMatrix = std::array<std::array<LambdaOneForm, 2>, 2>;

SL2Matrix sl2_mul(const SL2Matrix& x, const SL2Matrix& y);

// lam t [e_i, t^-1 e_3 t - e_3] with e_k = -(i/2) sigma_k, i in {0,1,2}.
SL2Matrix su2_cross_relation(std::size_t i);
// The expanded right-hand sides of [x^i, t].
SL2Matrix su2_cross_relation_expanded(std::size_t i);
// omega^j <| x^i on Lambda^1_A.
LambdaOneForm su2_right_action(std::size_t i, const LambdaOneForm& w);
// The expected omega([x^i, t]).
OmegaMatrix su2_expected_omega(std::size_t i);

// Checks cross_relations, counit, omega_matches_expected and module_map.
Report verify_su2_bicrossproduct_omega();

// Left symmetry, compatibility with the su2* bracket, invertible basis
// change, real-form products t o t = -2t, t o x_i = -x_i, and the b_{1,-2}
// subalgebra on {t, x1}.
Report verify_su2_semiclassical(const PreLieProduct& xi);
Report verify_su2_semiclassical();

}  // namespace plk
