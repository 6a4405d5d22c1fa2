#pragma once

#include <map>
#include <string>
#include <utility>

#include "plk/scalar.hpp"

namespace plk {

// Exponent pair (x-exponent in Q, t-exponent in N).
struct Monomial {
  Rational xexp{0};
  unsigned texp = 0;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.xexp != b.xexp) return a.xexp < b.xexp;
    return a.texp < b.texp;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.xexp == b.xexp && a.texp == b.texp;
  }
};

enum class Var { x, t };

// Commutative finite sum of c * x^a t^b with c a LambdaScalar.
class GenPoly {
 public:
  using Terms = std::map<Monomial, LambdaScalar>;

  GenPoly() = default;
  GenPoly(int c) : GenPoly(LambdaScalar(c)) {}
  GenPoly(const Scalar& c) : GenPoly(LambdaScalar(c)) {}
  GenPoly(const LambdaScalar& c);
  static GenPoly term(const LambdaScalar& c, const Rational& xexp, unsigned texp);
  static GenPoly x() { return term(1, 1, 0); }
  static GenPoly t() { return term(1, 0, 1); }
  static GenPoly x_pow(const Rational& a) { return term(1, a, 0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const LambdaScalar& c);

  GenPoly operator-() const;
  GenPoly& operator+=(const GenPoly& o);
  GenPoly& operator-=(const GenPoly& o);
  GenPoly& operator*=(const Scalar& s);
  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(GenPoly a, const Scalar& s) { return a *= s; }
  friend GenPoly operator*(const Scalar& s, GenPoly a) { return a *= s; }
  friend bool operator==(const GenPoly& a, const GenPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GenPoly& a, const GenPoly& b) { return !(a == b); }

  GenPoly pow(unsigned n) const;
  // Drop all positive lambda-degree parts.
  GenPoly at_lambda_zero() const;
  std::string str() const;

 private:
  Terms terms_;
};

GenPoly genpoly_derivative(const GenPoly& f, Var var);

// Fraction of GenPolys; no gcd normalisation.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(const GenPoly& num);
  // Throws std::domain_error on a zero denominator.
  RatFunc(GenPoly num, GenPoly den);

  const GenPoly& num() const { return num_; }
  const GenPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  std::string str() const;

 private:
  GenPoly num_, den_;
};

RatFunc ratfunc_derivative(const RatFunc& f, Var var);
bool ratfunc_equal(const RatFunc& f, const RatFunc& g);

}  // namespace plk
