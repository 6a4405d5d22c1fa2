#include "plk/genpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace plk {

GenPoly::GenPoly(const LambdaScalar& c) {
  if (!c.is_zero()) terms_[Monomial{}] = c;
}

GenPoly GenPoly::term(const LambdaScalar& c, const Rational& xexp, unsigned texp) {
  GenPoly p;
  Rational a = xexp;
  a.canonicalize();
  p.add_term(Monomial{a, texp}, c);
  return p;
}

void GenPoly::add_term(const Monomial& m, const LambdaScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GenPoly GenPoly::operator-() const {
  GenPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GenPoly& GenPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  GenPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(Monomial{ma.xexp + mb.xexp, ma.texp + mb.texp}, ca * cb);
  return out;
}

GenPoly GenPoly::pow(unsigned n) const {
  GenPoly r(1);
  for (unsigned k = 0; k < n; ++k) r = r * *this;
  return r;
}

GenPoly GenPoly::at_lambda_zero() const {
  GenPoly out;
  for (const auto& [m, c] : terms_) out.add_term(m, LambdaScalar(c.coeff(0)));
  return out;
}

std::string GenPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (m.xexp != 0) os << "*x^" << rational_str(m.xexp);
    if (m.texp != 0) os << "*t^" << m.texp;
  }
  return os.str();
}

GenPoly genpoly_derivative(const GenPoly& f, Var var) {
  GenPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (var == Var::x) {
      if (m.xexp == 0) continue;
      out.add_term(Monomial{m.xexp - 1, m.texp}, c * Scalar(m.xexp));
    } else {
      if (m.texp == 0) continue;
      out.add_term(Monomial{m.xexp, m.texp - 1}, c * Scalar(long(m.texp)));
    }
  }
  return out;
}

RatFunc::RatFunc(const GenPoly& num) : num_(num), den_(1) {}

RatFunc::RatFunc(GenPoly num, GenPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str() const {
  if (den_ == GenPoly(1)) return num_.str();
  return "[" + num_.str() + "] / [" + den_.str() + "]";
}

RatFunc ratfunc_derivative(const RatFunc& f, Var var) {
  GenPoly dn = genpoly_derivative(f.num(), var);
  GenPoly dd = genpoly_derivative(f.den(), var);
  if (dd.is_zero()) return RatFunc(dn, f.den());
  return RatFunc(dn * f.den() - f.num() * dd, f.den() * f.den());
}

bool ratfunc_equal(const RatFunc& f, const RatFunc& g) {
  return f.num() * g.den() == g.num() * f.den();
}

}  // namespace plk
