#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace plk {

using Rational = mpq_class;

// Throws std::domain_error when den == 0.
Rational make_rational(long num, long den = 1);
std::string rational_str(const Rational& q);

// Gaussian rational re + im*i.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int n) : re_(n) {}
  Scalar(long n) : re_(n) {}
  Scalar(Rational re, Rational im = 0);

  static Scalar i();

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

// Polynomial in the formal parameter lambda over Scalar.  Conjugation sends
// lambda to -lambda and i to -i.
class LambdaScalar {
 public:
  LambdaScalar() = default;
  LambdaScalar(int n) : LambdaScalar(Scalar(n)) {}
  LambdaScalar(const Scalar& s);
  explicit LambdaScalar(std::vector<Scalar> coeffs);

  static LambdaScalar lambda();
  static LambdaScalar monomial(const Scalar& c, unsigned degree);

  bool is_zero() const { return c_.empty(); }
  // Degree of the highest nonzero coefficient; 0 for the zero polynomial.
  unsigned degree() const { return c_.empty() ? 0 : unsigned(c_.size() - 1); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(unsigned k) const { return k < c_.size() ? c_[k] : Scalar(); }
  bool is_constant() const { return c_.size() <= 1; }

  LambdaScalar conj() const;
  Scalar eval(const Scalar& lam) const;

  LambdaScalar operator-() const;
  LambdaScalar& operator+=(const LambdaScalar& o);
  LambdaScalar& operator-=(const LambdaScalar& o);
  LambdaScalar& operator*=(const LambdaScalar& o);
  LambdaScalar& operator*=(const Scalar& s);

  friend LambdaScalar operator+(LambdaScalar a, const LambdaScalar& b) { return a += b; }
  friend LambdaScalar operator-(LambdaScalar a, const LambdaScalar& b) { return a -= b; }
  friend LambdaScalar operator*(const LambdaScalar& a, const LambdaScalar& b);
  friend LambdaScalar operator*(LambdaScalar a, const Scalar& s) { return a *= s; }
  friend LambdaScalar operator*(const Scalar& s, LambdaScalar a) { return a *= s; }
  friend bool operator==(const LambdaScalar& a, const LambdaScalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LambdaScalar& a, const LambdaScalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

}  // namespace plk
