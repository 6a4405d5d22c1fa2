#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "plk/check.hpp"
#include "plk/genpoly.hpp"
#include "plk/prelie.hpp"

namespace plk {

// Raised for functions outside C[x, x^-1, x^q; t], such as ln x.
class UnsupportedFunction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element of the localized algebra generated by x^q (q rational) and t with
// xt - tx = lam x, stored normal ordered as sum c x^a t^b.
class LocalizedElement {
 public:
  LocalizedElement() = default;
  LocalizedElement(int c) : p_(c) {}
  LocalizedElement(const Scalar& c) : p_(c) {}
  LocalizedElement(const LambdaScalar& c) : p_(c) {}
  explicit LocalizedElement(GenPoly p) : p_(std::move(p)) {}
  static LocalizedElement monomial(const LambdaScalar& c, const Rational& a, unsigned b) {
    return LocalizedElement(GenPoly::term(c, a, b));
  }
  static LocalizedElement x_pow(const Rational& a) { return monomial(1, a, 0); }
  static LocalizedElement t_pow(unsigned b) { return monomial(1, 0, b); }

  const GenPoly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  LocalizedElement operator-() const { return LocalizedElement(-p_); }
  LocalizedElement& operator+=(const LocalizedElement& o) { p_ += o.p_; return *this; }
  LocalizedElement& operator-=(const LocalizedElement& o) { p_ -= o.p_; return *this; }
  friend LocalizedElement operator+(LocalizedElement a, const LocalizedElement& b) { return a += b; }
  friend LocalizedElement operator-(LocalizedElement a, const LocalizedElement& b) { return a -= b; }
  // Ordered product: x^a t^b . x^c t^d = x^(a+c) (t - lam c)^b t^d.
  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator*(const LambdaScalar& s, const LocalizedElement& a) {
    return LocalizedElement(GenPoly(s) * a.p_);
  }
  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b) { return a.p_ == b.p_; }
  friend bool operator!=(const LocalizedElement& a, const LocalizedElement& b) { return !(a == b); }

  // x* = x, t* = t, lam* = -lam, order reversed.
  LocalizedElement star() const;
  // Substitute t -> t + c.
  LocalizedElement shift_t(const Scalar& c) const;
  std::string str() const { return p_.str(); }

 private:
  GenPoly p_;
};

// c[0] dx + c[1] dt, functions on the left.
struct OneForm {
  std::array<LocalizedElement, 2> c;
  static OneForm basis(std::size_t j) {
    OneForm w;
    w.c[j] = 1;
    return w;
  }
  bool is_zero() const { return c[0].is_zero() && c[1].is_zero(); }
  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend OneForm operator*(const LambdaScalar& s, OneForm a);
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.c == b.c; }
  friend bool operator!=(const OneForm& a, const OneForm& b) { return !(a == b); }
  std::string str() const;
};

// sum c[i][j] e_i (x) e_j over {dx, dt}.
struct FormTensor {
  std::array<std::array<LocalizedElement, 2>, 2> c;
  bool is_zero() const;
  FormTensor& operator+=(const FormTensor& o);
  FormTensor& operator-=(const FormTensor& o);
  friend FormTensor operator+(FormTensor a, const FormTensor& b) { return a += b; }
  friend FormTensor operator-(FormTensor a, const FormTensor& b) { return a -= b; }
  friend FormTensor operator*(const LambdaScalar& s, FormTensor a);
  friend bool operator==(const FormTensor& a, const FormTensor& b) { return a.c == b.c; }
  friend bool operator!=(const FormTensor& a, const FormTensor& b) { return !(a == b); }
  std::string str() const;
};

// First-order calculus on the localized U_lam(b) given by a pre-Lie product
// on b = {x,t}: [f, de_j] = lam d(f o e_j) for f in {x, t}.
class LocalizedCalculus {
 public:
  // Requires a left-symmetric product compatible with [x,t] = x and with
  // (x o .)^2 = 0 on forms, which makes the power rule for x^q closed form.
  explicit LocalizedCalculus(PreLieProduct xi, std::string id = "");

  const std::string& id() const { return id_; }
  const PreLieProduct& prelie() const { return xi_; }

  OneForm left_mul(const LocalizedElement& f, const OneForm& w) const;
  OneForm right_mul(const OneForm& w, const LocalizedElement& f) const;
  FormTensor left_mul(const LocalizedElement& f, const FormTensor& g) const;
  FormTensor right_mul(const FormTensor& g, const LocalizedElement& f) const;
  // a (x)_A b with the coefficient of b moved into the left leg.
  FormTensor tensor(const OneForm& a, const OneForm& b) const;

  // (f e_j)* = e_j f*.
  OneForm star(const OneForm& w) const;
  // flip(* (x) *).
  FormTensor star(const FormTensor& g) const;

 private:
  OneForm basis_times(std::size_t j, const Monomial& m, const LambdaScalar& c) const;

  PreLieProduct xi_;
  std::string id_;
  Scalar mx_[2][2], mt_[2][2];
};

// "b1(a)", "b2(b)", "b4", "b5"; also the catalog ids b1_a, b2_b.  b3 raises
// UnsupportedFunction.
LocalizedCalculus localized_calculus(const std::string& calculus_id);

// Result of normal ordering; grade 0, 1 or 2 selects the populated field.
struct NormalOrdered {
  unsigned grade = 0;
  LocalizedElement function;
  OneForm form;
  FormTensor tensor;
  std::string str() const;
};

// Expression syntax: terms joined by + and -, each a product of factors
// separated by * or spaces: integers, p/q, i, lam, lam^n, x, x^q, x^(p/q), t, t^n, dx,
// dt.  "@" separates the two legs of a tensor.  At most one form per leg.
NormalOrdered normal_order_localized(const std::string& expr, const LocalizedCalculus& calc);
NormalOrdered normal_order_localized(const std::string& expr, const std::string& calculus_id);

LocalizedElement star_form(const LocalizedElement& f);
OneForm star_form(const OneForm& w, const LocalizedCalculus& calc);
FormTensor star_form(const FormTensor& g, const LocalizedCalculus& calc);

struct MetricCandidate {
  std::string calculus_id;
  FormTensor g;
};

// Central 1-forms u, v for the metric cases 1, 2, 4, 5; param is alpha or beta.
struct CentralForms {
  std::string calculus_id;
  OneForm u, v;
  Rational mu{0};  // lam-shift weight in the reality-corrected form
};
CentralForms central_forms(int case_no, const Rational& param = 0);

// c1 u(x)u + c2 (u(x)v + v*(x)u) + c3 (v*(x)v + mu lam (u(x)v - v*(x)u)).
MetricCandidate metric_from_uv(const CentralForms& f, const Scalar& c1, const Scalar& c2, const Scalar& c3);
MetricCandidate standard_metric(int case_no, const Rational& param, const Scalar& c1, const Scalar& c2,
                                const Scalar& c3);

// central, wedge_symmetric, real, nondegenerate.
Report check_metric(const MetricCandidate& m);

MetricCandidate shift_t(const MetricCandidate& m, const Scalar& c);

struct CurvatureResult {
  RatFunc scalar_curvature;
  GenPoly E, F, G;  // g = E dx^2 + 2F dx dt + G dt^2 at lam = 0
};

// Throws PreconditionError when E G - F^2 vanishes.
CurvatureResult scalar_curvature_2d(const GenPoly& E, const GenPoly& F, const GenPoly& G);
CurvatureResult scalar_curvature_classical(const MetricCandidate& m);

// Closed forms for the standard metrics: case 1 for any c, cases
// 2, 4, 5 with c2 = 0.  Empty otherwise.
std::optional<RatFunc> closed_form_curvature(int case_no, const Rational& param, const Scalar& c1, const Scalar& c2,
                                           const Scalar& c3);

}  // namespace plk
