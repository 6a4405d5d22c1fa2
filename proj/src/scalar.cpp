#include "plk/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace plk {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::i() { return Scalar(0, 1); }

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  Rational n = o.re_ * o.re_ + o.im_ * o.im_;
  Scalar inv(o.re_ / n, -o.im_ / n);
  return *this *= inv;
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return rational_str(re_);
  std::string imag;
  if (im_ == 1) imag = "i";
  else if (im_ == -1) imag = "-i";
  else imag = rational_str(im_) + "i";
  if (sgn(re_) == 0) return imag;
  std::string out = rational_str(re_);
  if (sgn(im_) > 0) out += "+";
  return out + imag;
}

LambdaScalar::LambdaScalar(const Scalar& s) {
  if (!s.is_zero()) c_.push_back(s);
}

LambdaScalar::LambdaScalar(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

LambdaScalar LambdaScalar::lambda() { return monomial(Scalar(1), 1); }

LambdaScalar LambdaScalar::monomial(const Scalar& c, unsigned degree) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return LambdaScalar(std::move(v));
}

void LambdaScalar::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LambdaScalar LambdaScalar::conj() const {
  LambdaScalar out = *this;
  for (std::size_t k = 0; k < out.c_.size(); ++k) {
    out.c_[k] = out.c_[k].conj();
    if (k % 2 == 1) out.c_[k] = -out.c_[k];
  }
  return out;
}

Scalar LambdaScalar::eval(const Scalar& lam) const {
  Scalar acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * lam + c_[k];
  return acc;
}

LambdaScalar LambdaScalar::operator-() const {
  LambdaScalar out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

LambdaScalar& LambdaScalar::operator+=(const LambdaScalar& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

LambdaScalar& LambdaScalar::operator-=(const LambdaScalar& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

LambdaScalar operator*(const LambdaScalar& a, const LambdaScalar& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return LambdaScalar(std::move(r));
}

LambdaScalar& LambdaScalar::operator*=(const LambdaScalar& o) { return *this = *this * o; }

LambdaScalar& LambdaScalar::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::string LambdaScalar::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c_[k].str();
    bool compound = cs.find_first_of("+", 1) != std::string::npos ||
                    (cs.find('-', 1) != std::string::npos);
    if (k == 0) {
      os << cs;
      continue;
    }
    if (cs == "1") {
    } else if (cs == "-1") {
      os << "-";
    } else if (compound) {
      os << "(" << cs << ")*";
    } else {
      os << cs << "*";
    }
    os << "lam";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace plk
