#include "plk/metric.hpp"

#include <cctype>
#include <sstream>

#include "plk/catalog.hpp"

namespace plk {

namespace {

Rational binom(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

const char* kCase3Message =
    "logarithmic functions are not supported: metric case 3 is excluded, since the change of "
    "variable it needs reduces it to case 1 with alpha = -1";

}  // namespace

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
  GenPoly out;
  const LambdaScalar lam = LambdaScalar::lambda();
  for (const auto& [ma, ca] : a.p_.terms())
    for (const auto& [mb, cb] : b.p_.terms()) {
      LambdaScalar c = ca * cb;
      LambdaScalar shift = LambdaScalar(Scalar(-mb.xexp)) * lam;  // t x^c = x^c (t - lam c)
      LambdaScalar pw = 1;
      for (unsigned k = 0; k <= ma.texp; ++k) {
        out.add_term(Monomial{ma.xexp + mb.xexp, ma.texp - k + mb.texp}, c * pw * Scalar(binom(ma.texp, k)));
        pw *= shift;
      }
    }
  return LocalizedElement(std::move(out));
}

LocalizedElement LocalizedElement::star() const {
  LocalizedElement out;
  for (const auto& [m, c] : p_.terms()) out += c.conj() * (t_pow(m.texp) * x_pow(m.xexp));
  return out;
}

LocalizedElement LocalizedElement::shift_t(const Scalar& c) const {
  GenPoly out;
  for (const auto& [m, k] : p_.terms()) {
    Scalar pw = 1;
    for (unsigned j = 0; j <= m.texp; ++j) {
      // C(b, j) c^j t^(b - j)
      out.add_term(Monomial{m.xexp, m.texp - j}, k * (pw * Scalar(binom(m.texp, j))));
      pw *= c;
    }
  }
  return LocalizedElement(std::move(out));
}

OneForm& OneForm::operator+=(const OneForm& o) {
  for (int j = 0; j < 2; ++j) c[j] += o.c[j];
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
  for (int j = 0; j < 2; ++j) c[j] -= o.c[j];
  return *this;
}

OneForm operator*(const LambdaScalar& s, OneForm a) {
  for (auto& e : a.c) e = s * e;
  return a;
}

namespace {
const char* kFormNames[2] = {"dx", "dt"};
}

std::string OneForm::str() const {
  std::string out;
  for (int j = 0; j < 2; ++j) {
    if (c[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c[j].str() + ") " + kFormNames[j];
  }
  return out.empty() ? "0" : out;
}

bool FormTensor::is_zero() const {
  for (const auto& row : c)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

FormTensor& FormTensor::operator+=(const FormTensor& o) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] += o.c[i][j];
  return *this;
}

FormTensor& FormTensor::operator-=(const FormTensor& o) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] -= o.c[i][j];
  return *this;
}

FormTensor operator*(const LambdaScalar& s, FormTensor a) {
  for (auto& row : a.c)
    for (auto& e : row) e = s * e;
  return a;
}

std::string FormTensor::str() const {
  std::string out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (c[i][j].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c[i][j].str() + ") " + kFormNames[i] + "@" + kFormNames[j];
    }
  return out.empty() ? "0" : out;
}

LocalizedCalculus::LocalizedCalculus(PreLieProduct xi, std::string id) : xi_(std::move(xi)), id_(std::move(id)) {
  if (xi_.dim != 2) throw PreconditionError("localized calculus needs a pre-Lie product on the 2D algebra b");
  Check ls = check_left_symmetry(xi_);
  if (!ls.ok) throw PreconditionError(ls);
  Check comp = check_compatibility(xi_, catalog::lie_b());
  if (!comp.ok) throw PreconditionError(comp);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) {
      mx_[j][k] = xi_.xi(0, j, k);
      mt_[j][k] = xi_.xi(1, j, k);
    }
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t l = 0; l < 2; ++l)
      if (!(mx_[j][0] * mx_[0][l] + mx_[j][1] * mx_[1][l]).is_zero())
        throw PreconditionError("x o (x o .) must vanish for the closed-form power rule");
}

OneForm LocalizedCalculus::basis_times(std::size_t j, const Monomial& m, const LambdaScalar& c) const {
  const LambdaScalar lam = LambdaScalar::lambda();
  struct Piece {
    Rational xexp;
    LambdaScalar coef;
    std::array<Scalar, 2> form;
  };
  // e_j x^a = x^a e_j - a lam x^(a-1) M_x e_j
  std::vector<Piece> pieces;
  std::array<Scalar, 2> ej{};
  ej[j] = 1;
  pieces.push_back({m.xexp, c, ej});
  if (m.xexp != 0) pieces.push_back({m.xexp - 1, c * lam * Scalar(-m.xexp), {mx_[j][0], mx_[j][1]}});

  // e t^b = sum_k C(b,k) t^(b-k) (-lam M_t)^k e
  OneForm out;
  for (const auto& p : pieces) {
    std::array<Scalar, 2> v = p.form;
    LambdaScalar pw = 1;
    for (unsigned k = 0; k <= m.texp; ++k) {
      LambdaScalar coef = p.coef * pw * Scalar(binom(m.texp, k));
      for (int l = 0; l < 2; ++l)
        if (!v[l].is_zero()) out.c[l] += LocalizedElement::monomial(coef * v[l], p.xexp, m.texp - k);
      v = {v[0] * mt_[0][0] + v[1] * mt_[1][0], v[0] * mt_[0][1] + v[1] * mt_[1][1]};
      pw *= -lam;
    }
  }
  return out;
}

OneForm LocalizedCalculus::left_mul(const LocalizedElement& f, const OneForm& w) const {
  OneForm out;
  for (int j = 0; j < 2; ++j) out.c[j] = f * w.c[j];
  return out;
}

OneForm LocalizedCalculus::right_mul(const OneForm& w, const LocalizedElement& f) const {
  OneForm out;
  for (std::size_t j = 0; j < 2; ++j) {
    if (w.c[j].is_zero()) continue;
    OneForm ef;
    for (const auto& [m, c] : f.poly().terms()) ef += basis_times(j, m, c);
    out += left_mul(w.c[j], ef);
  }
  return out;
}

FormTensor LocalizedCalculus::tensor(const OneForm& a, const OneForm& b) const {
  FormTensor out;
  for (std::size_t i = 0; i < 2; ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < 2; ++j) {
      if (b.c[j].is_zero()) continue;
      OneForm r = right_mul(OneForm::basis(i), b.c[j]);
      for (int k = 0; k < 2; ++k) out.c[k][j] += a.c[i] * r.c[k];
    }
  }
  return out;
}

FormTensor LocalizedCalculus::left_mul(const LocalizedElement& f, const FormTensor& g) const {
  FormTensor out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.c[i][j] = f * g.c[i][j];
  return out;
}

FormTensor LocalizedCalculus::right_mul(const FormTensor& g, const LocalizedElement& f) const {
  FormTensor out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (g.c[i][j].is_zero()) continue;
      OneForm left;
      left.c[i] = g.c[i][j];
      out += tensor(left, right_mul(OneForm::basis(j), f));
    }
  return out;
}

OneForm LocalizedCalculus::star(const OneForm& w) const {
  OneForm out;
  for (std::size_t j = 0; j < 2; ++j)
    if (!w.c[j].is_zero()) out += right_mul(OneForm::basis(j), w.c[j].star());
  return out;
}

FormTensor LocalizedCalculus::star(const FormTensor& g) const {
  FormTensor out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!g.c[i][j].is_zero()) out += tensor(OneForm::basis(j), right_mul(OneForm::basis(i), g.c[i][j].star()));
  return out;
}

LocalizedCalculus localized_calculus(const std::string& calculus_id) {
  auto param = [&](const std::string& rest) -> Rational {
    std::string s;
    if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
      s = rest.substr(1, rest.size() - 2);
    } else if (rest.size() >= 2 && rest.front() == '_') {
      s = rest.substr(1);
      for (auto& ch : s)
        if (ch == '_') ch = '/';
    } else {
      throw std::invalid_argument("malformed calculus id: " + calculus_id);
    }
    Rational q;
    try {
      q = Rational(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed parameter in calculus id: " + calculus_id);
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in calculus id: " + calculus_id);
    q.canonicalize();
    return q;
  };
  if (calculus_id == "b3") throw UnsupportedFunction(kCase3Message);
  if (calculus_id == "b4") return LocalizedCalculus(catalog::b4(), "b4");
  if (calculus_id == "b5") return LocalizedCalculus(catalog::b5(), "b5");
  if (calculus_id.rfind("b1", 0) == 0) {
    Rational a = param(calculus_id.substr(2));
    return LocalizedCalculus(catalog::b1(a), "b1(" + rational_str(a) + ")");
  }
  if (calculus_id.rfind("b2", 0) == 0) {
    Rational b = param(calculus_id.substr(2));
    return LocalizedCalculus(catalog::b2(b), "b2(" + rational_str(b) + ")");
  }
  throw std::invalid_argument("unknown calculus id: " + calculus_id);
}

std::string NormalOrdered::str() const {
  if (grade == 0) return function.str();
  if (grade == 1) return form.str();
  return tensor.str();
}

namespace {

struct Factor {
  bool is_form = false;
  std::size_t form = 0;
  LocalizedElement value;
};

struct Term {
  LambdaScalar coeff = 1;
  std::vector<std::vector<Factor>> legs{1};
};

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == s_.size()) throw std::invalid_argument("empty expression");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      Term t;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') t.coeff = -1;
        ++pos_;
      } else if (!first) {
        throw std::invalid_argument(error("expected + or -"));
      }
      first = false;
      parse_term(t);
      terms.push_back(std::move(t));
    }
    return terms;
  }

 private:
  std::string error(const std::string& what) const {
    return what + " at position " + std::to_string(pos_) + " in '" + s_ + "'";
  }

  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) ++pos_;
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  Rational unsigned_rational() {
    if (!at_digit()) throw std::invalid_argument(error("expected a number"));
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    std::string num = s_.substr(start, pos_ - start), den = "1";
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      start = pos_;
      if (!at_digit()) throw std::invalid_argument(error("expected a denominator"));
      while (at_digit()) ++pos_;
      den = s_.substr(start, pos_ - start);
    }
    Rational q(num + "/" + den);
    if (q.get_den() == 0) throw std::invalid_argument(error("zero denominator"));
    q.canonicalize();
    return q;
  }

  Rational signed_rational() {
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    Rational q = unsigned_rational();
    return neg ? Rational(-q) : q;
  }

  Rational exponent() {
    if (pos_ >= s_.size() || s_[pos_] != '^') return 1;
    ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      Rational q = signed_rational();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw std::invalid_argument(error("expected )"));
      ++pos_;
      return q;
    }
    return signed_rational();
  }

  void parse_term(Term& t) {
    while (true) {
      skip();
      if (pos_ == s_.size() || s_[pos_] == '+' || s_[pos_] == '-') return;
      char ch = s_[pos_];
      if (ch == '@') {
        ++pos_;
        if (t.legs.size() == 2) throw std::invalid_argument(error("at most two tensor legs"));
        t.legs.emplace_back();
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        t.coeff *= Scalar(unsigned_rational());
        continue;
      }
      if (!std::isalpha(static_cast<unsigned char>(ch))) throw std::invalid_argument(error("unexpected character"));
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      Factor f;
      if (id == "x") {
        f.value = LocalizedElement::x_pow(exponent());
      } else if (id == "t") {
        Rational b = exponent();
        if (b < 0 || b.get_den() != 1) throw UnsupportedFunction(error("t admits only natural exponents"));
        f.value = LocalizedElement::t_pow(static_cast<unsigned>(b.get_num().get_ui()));
      } else if (id == "dx" || id == "dt") {
        f.is_form = true;
        f.form = id == "dx" ? 0 : 1;
      } else if (id == "lam") {
        Rational n = exponent();
        if (n < 0 || n.get_den() != 1) throw std::invalid_argument(error("lam admits only natural exponents"));
        t.coeff *= LambdaScalar::monomial(1, static_cast<unsigned>(n.get_num().get_ui()));
        continue;
      } else if (id == "i") {
        t.coeff *= Scalar::i();
        continue;
      } else if (id == "ln" || id == "log") {
        throw UnsupportedFunction(kCase3Message);
      } else {
        throw UnsupportedFunction(error("unsupported function '" + id + "'"));
      }
      t.legs.back().push_back(std::move(f));
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

NormalOrdered eval_leg(const std::vector<Factor>& leg, const LocalizedCalculus& calc) {
  NormalOrdered r;
  r.function = 1;
  for (const auto& f : leg) {
    if (f.is_form) {
      if (r.grade == 1) throw std::invalid_argument("at most one form per tensor leg; use @ between legs");
      r.form = calc.left_mul(r.function, OneForm::basis(f.form));
      r.grade = 1;
    } else if (r.grade == 0) {
      r.function = r.function * f.value;
    } else {
      r.form = calc.right_mul(r.form, f.value);
    }
  }
  return r;
}

}  // namespace

NormalOrdered normal_order_localized(const std::string& expr, const LocalizedCalculus& calc) {
  NormalOrdered out;
  bool have = false;
  for (const auto& term : ExprParser(expr).parse()) {
    NormalOrdered piece = eval_leg(term.legs[0], calc);
    if (term.legs.size() == 2) {
      NormalOrdered right = eval_leg(term.legs[1], calc);
      if (piece.grade != 1 || right.grade != 1) throw std::invalid_argument("each tensor leg needs exactly one form");
      piece.tensor = calc.tensor(piece.form, right.form);
      piece.grade = 2;
    }
    if (have && piece.grade != out.grade) throw std::invalid_argument("terms of mixed form degree in '" + expr + "'");
    out.grade = piece.grade;
    have = true;
    out.function += term.coeff * piece.function;
    out.form += term.coeff * piece.form;
    out.tensor += term.coeff * piece.tensor;
  }
  if (out.grade != 0) out.function = LocalizedElement();
  if (out.grade != 1) out.form = OneForm();
  if (out.grade != 2) out.tensor = FormTensor();
  return out;
}

NormalOrdered normal_order_localized(const std::string& expr, const std::string& calculus_id) {
  return normal_order_localized(expr, localized_calculus(calculus_id));
}

LocalizedElement star_form(const LocalizedElement& f) { return f.star(); }
OneForm star_form(const OneForm& w, const LocalizedCalculus& calc) { return calc.star(w); }
FormTensor star_form(const FormTensor& g, const LocalizedCalculus& calc) { return calc.star(g); }

CentralForms central_forms(int case_no, const Rational& param) {
  using LE = LocalizedElement;
  CentralForms f;
  switch (case_no) {
    case 1:
      f.calculus_id = "b1(" + rational_str(param) + ")";
      f.u.c[0] = LE::x_pow(-1);
      f.v.c[1] = LE::x_pow(param);
      break;
    case 2:
      f.calculus_id = "b2(" + rational_str(param) + ")";
      f.u.c[0] = LE::x_pow(param - 1);
      f.v.c[0] = LE::monomial(Scalar(-param), param - 1, 1);
      f.v.c[1] = LE::x_pow(param);
      f.mu = param;
      break;
    case 3:
      throw UnsupportedFunction(kCase3Message);
    case 4:
      f.calculus_id = "b4";
      f.u.c[1] = LE::x_pow(-2);
      f.v.c[0] = LE::x_pow(-1);
      f.v.c[1] = -LE::monomial(1, -2, 1);
      f.mu = 1;
      break;
    case 5:
      f.calculus_id = "b5";
      f.u.c[0] = 1;
      f.v.c[0] = LE::x_pow(1) - LE::t_pow(1);
      f.v.c[1] = LE::x_pow(1);
      f.mu = 1;
      break;
    default:
      throw std::invalid_argument("metric case must be 1, 2, 4 or 5");
  }
  return f;
}

MetricCandidate metric_from_uv(const CentralForms& f, const Scalar& c1, const Scalar& c2, const Scalar& c3) {
  LocalizedCalculus calc = localized_calculus(f.calculus_id);
  OneForm vs = calc.star(f.v);
  FormTensor uu = calc.tensor(f.u, f.u), uv = calc.tensor(f.u, f.v), vsu = calc.tensor(vs, f.u),
             vsv = calc.tensor(vs, f.v);
  LambdaScalar mulam = LambdaScalar(Scalar(f.mu)) * LambdaScalar::lambda();
  MetricCandidate m;
  m.calculus_id = calc.id();
  m.g = LambdaScalar(c1) * uu + LambdaScalar(c2) * (uv + vsu) + LambdaScalar(c3) * (vsv + mulam * (uv - vsu));
  return m;
}

MetricCandidate standard_metric(int case_no, const Rational& param, const Scalar& c1, const Scalar& c2,
                                const Scalar& c3) {
  return metric_from_uv(central_forms(case_no, param), c1, c2, c3);
}

Report check_metric(const MetricCandidate& m) {
  LocalizedCalculus calc = localized_calculus(m.calculus_id);
  Report r("metric " + calc.id());

  Check central("central");
  const LocalizedElement gens[2] = {LocalizedElement::x_pow(1), LocalizedElement::t_pow(1)};
  for (std::size_t a = 0; a < 2; ++a) {
    FormTensor diff = calc.left_mul(gens[a], m.g) - calc.right_mul(m.g, gens[a]);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) central.require(diff.c[i][j].is_zero(), {a, i, j});
  }
  r.add(central);

  Check wedge("wedge_symmetric");
  LocalizedElement w = m.g.c[0][1] - m.g.c[1][0];
  wedge.require(w.is_zero(), {0, 1});
  if (!w.is_zero()) wedge.note = "wedge(g) = (" + w.str() + ") dx^dt";
  r.add(wedge);

  Check real("real");
  FormTensor diff = calc.star(m.g) - m.g;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) real.require(diff.c[i][j].is_zero(), {i, j});
  r.add(real);

  Check nondeg("nondegenerate");
  LocalizedElement det = m.g.c[0][0] * m.g.c[1][1] - m.g.c[0][1] * m.g.c[1][0];
  nondeg.require(!det.is_zero(), {});
  r.add(nondeg);
  return r;
}

MetricCandidate shift_t(const MetricCandidate& m, const Scalar& c) {
  MetricCandidate out = m;
  for (auto& row : out.g.c)
    for (auto& e : row) e = e.shift_t(c);
  return out;
}

namespace {

// Divide by the common monomial factor of numerator and denominator, and by
// the denominator when it is a single term.
RatFunc simplify(const RatFunc& f) {
  if (f.num().is_zero()) return RatFunc();
  const GenPoly* parts[2] = {&f.num(), &f.den()};
  Rational minx;
  unsigned mint = 0;
  bool first = true;
  for (const GenPoly* p : parts)
    for (const auto& [m, c] : p->terms()) {
      if (first || m.xexp < minx) minx = m.xexp;
      if (first || m.texp < mint) mint = m.texp;
      first = false;
    }
  Scalar scale = 1;
  if (f.den().terms().size() == 1) {
    const auto& [m, c] = *f.den().terms().begin();
    if (c.is_constant()) {
      minx = m.xexp;
      mint = m.texp;
      scale = c.coeff(0);
    }
  }
  auto divide = [&](const GenPoly& p) {
    GenPoly out;
    for (const auto& [m, c] : p.terms())
      out.add_term(Monomial{m.xexp - minx, m.texp - mint}, c * (Scalar(1) / scale));
    return out;
  };
  // A single-term denominator may carry t-powers the numerator lacks.
  for (const auto& [m, c] : f.num().terms())
    if (m.texp < mint) return f;
  return RatFunc(divide(f.num()), divide(f.den()));
}

RatFunc rsum(const RatFunc& a, const RatFunc& b) { return simplify(a + b); }
RatFunc rmul(const RatFunc& a, const RatFunc& b) { return simplify(a * b); }

}  // namespace

CurvatureResult scalar_curvature_2d(const GenPoly& E, const GenPoly& F, const GenPoly& G) {
  CurvatureResult res;
  res.E = E;
  res.F = F;
  res.G = G;
  GenPoly det = E * G - F * F;
  if (det.is_zero()) throw PreconditionError("degenerate classical metric: E G - F^2 = 0");
  const Var vars[2] = {Var::x, Var::t};
  GenPoly g[2][2] = {{E, F}, {F, G}};
  RatFunc inv[2][2] = {{RatFunc(G, det), RatFunc(-F, det)}, {RatFunc(-F, det), RatFunc(E, det)}};
  GenPoly dg[2][2][2];  // dg[k][i][j] = d_k g_ij
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) dg[k][i][j] = genpoly_derivative(g[i][j], vars[k]);

  const RatFunc half(GenPoly(Scalar(make_rational(1, 2))));
  RatFunc gam[2][2][2];  // gam[k][i][j] = Gamma^k_ij
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        RatFunc s;
        for (int l = 0; l < 2; ++l) s = rsum(s, rmul(inv[k][l], RatFunc(dg[i][j][l] + dg[j][i][l] - dg[l][i][j])));
        gam[k][i][j] = rmul(half, s);
      }

  // R_bd = d_a Gamma^a_bd - d_d Gamma^a_ab + Gamma^a_ae Gamma^e_bd - Gamma^a_de Gamma^e_ab
  RatFunc R;
  for (int b = 0; b < 2; ++b)
    for (int d = 0; d < 2; ++d) {
      RatFunc ric;
      for (int a = 0; a < 2; ++a) {
        ric = rsum(ric, simplify(ratfunc_derivative(gam[a][b][d], vars[a])));
        ric = rsum(ric, -simplify(ratfunc_derivative(gam[a][a][b], vars[d])));
        for (int e = 0; e < 2; ++e) {
          ric = rsum(ric, rmul(gam[a][a][e], gam[e][b][d]));
          ric = rsum(ric, -rmul(gam[a][d][e], gam[e][a][b]));
        }
      }
      R = rsum(R, rmul(inv[b][d], ric));
    }
  res.scalar_curvature = R;
  return res;
}

CurvatureResult scalar_curvature_classical(const MetricCandidate& m) {
  GenPoly E = m.g.c[0][0].poly().at_lambda_zero();
  GenPoly F = ((m.g.c[0][1] + m.g.c[1][0]).poly() * Scalar(make_rational(1, 2))).at_lambda_zero();
  GenPoly G = m.g.c[1][1].poly().at_lambda_zero();
  return scalar_curvature_2d(E, F, G);
}

std::optional<RatFunc> closed_form_curvature(int case_no, const Rational& param, const Scalar& c1, const Scalar& c2,
                                           const Scalar& c3) {
  const GenPoly x = GenPoly::x(), t = GenPoly::t();
  if (case_no == 1) {
    Scalar det = c1 * c3 - c2 * c2;
    if (det.is_zero()) return std::nullopt;
    return RatFunc(GenPoly(Scalar(-2 * param * param) * c3 / det));
  }
  if (!c2.is_zero() || c1.is_zero() || c3.is_zero()) return std::nullopt;
  switch (case_no) {
    case 2: {
      // -x^(-2b) 2b(b+1) c1 / (c1 + c3 (b^2 - 1) t^2)^2
      GenPoly den = GenPoly(c1) + GenPoly(c3 * Scalar(param * param - 1)) * t * t;
      return RatFunc(GenPoly::term(LambdaScalar(Scalar(-2 * param * (param + 1)) * c1), -2 * param, 0), den * den);
    }
    case 4:
      return RatFunc((x * x - GenPoly(2) * t * t) * (Scalar(4) / c1)) - RatFunc(GenPoly(Scalar(8) / c3));
    case 5:
      return RatFunc(GenPoly::term(LambdaScalar(Scalar(-4) / c1), -2, 0));
    default:
      return std::nullopt;
  }
}

}  // namespace plk
