#include "plk/enveloping.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace plk {

namespace {

const LambdaScalar& lam() {
  static const LambdaScalar l = LambdaScalar::lambda();
  return l;
}

LambdaScalar lam_pow(std::size_t k) { return LambdaScalar::monomial(1, unsigned(k)); }

template <class Map, class K>
void accumulate(Map& m, const K& key, const LambdaScalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

std::string word_str(const Word& w, const Names& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + names.at(w[i]);
  return s;
}

std::string coeff_prefix(const LambdaScalar& c) {
  std::string cs = c.str();
  if (cs == "1") return "";
  if (cs == "-1") return "-";
  return "(" + cs + ")*";
}

// Sort a raw list of generator indices into a strictly increasing monomial;
// returns the permutation sign or 0 on a repeat.
int canonical(FormMono& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
      if (w[j - 1] == w[j]) return 0;
      std::swap(w[j - 1], w[j]);
      sign = -sign;
    }
  return sign;
}

Word subword(const Word& w, unsigned mask, bool in) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (bool(mask >> i & 1u) == in) out.push_back(w[i]);
  return out;
}

Word cat_words(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

NCElement NCElement::word(const Word& w, const LambdaScalar& c) {
  NCElement e;
  e.add(w, c);
  return e;
}

bool NCElement::is_normal() const {
  for (const auto& [w, c] : terms_)
    if (!std::is_sorted(w.begin(), w.end())) return false;
  return true;
}

void NCElement::add(const Word& w, const LambdaScalar& c) { accumulate(terms_, w, c); }

NCElement& NCElement::operator+=(const NCElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCElement& NCElement::operator*=(const LambdaScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NCElement concat(const NCElement& a, const NCElement& b) {
  NCElement out;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, e] : b.terms_) out.add(cat_words(u, v), c * e);
  return out;
}

std::string NCElement::str(const Names& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string p = coeff_prefix(c);
    if (w.empty())
      os << c.str();
    else
      os << p << word_str(w, names);
  }
  return os.str();
}

FormElement FormElement::function(const NCElement& f) {
  FormElement out;
  for (const auto& [w, c] : f.terms()) out.add(w, {}, c);
  return out;
}

FormElement FormElement::term(const Word& u, const FormMono& w, const LambdaScalar& c) {
  FormElement out;
  out.add(u, w, c);
  return out;
}

std::size_t FormElement::grade() const {
  if (terms_.empty()) return 0;
  std::size_t g = terms_.begin()->first.second.size();
  for (const auto& [k, c] : terms_)
    if (k.second.size() != g) throw std::logic_error("form element of mixed grade");
  return g;
}

void FormElement::add(const Word& u, const FormMono& w, const LambdaScalar& c) {
  if (!std::is_sorted(w.begin(), w.end()) || std::adjacent_find(w.begin(), w.end()) != w.end())
    throw std::invalid_argument("form monomial must be strictly increasing");
  accumulate(terms_, Key{u, w}, c);
}

FormElement& FormElement::operator+=(const FormElement& o) {
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

FormElement& FormElement::operator-=(const FormElement& o) {
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
  return *this;
}

FormElement& FormElement::operator*=(const LambdaScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string FormElement::str(const Names& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const auto& [u, w] = k;
    os << coeff_prefix(c);
    bool any = false;
    if (!u.empty()) {
      os << word_str(u, names);
      any = true;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      os << (i ? "^" : any ? "*" : "") << "d" << names.at(w[i]);
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

int wedge_sign(const FormMono& a, const FormMono& b, FormMono& out) {
  out = a;
  out.insert(out.end(), b.begin(), b.end());
  return canonical(out);
}

NCElement normal_form(const Word& w, const LieAlgebra& m, RewriteStrategy s) {
  return normal_form(NCElement::word(w), m, s);
}

NCElement normal_form(const NCElement& e, const LieAlgebra& m, RewriteStrategy s) {
  Dense3 c(m.bracket);
  std::size_t n = m.dim;
  NCElement out;
  std::map<Word, LambdaScalar> work(e.terms().begin(), e.terms().end());
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& w = node.key();
    const LambdaScalar& coef = node.mapped();
    std::size_t pos = w.size();
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
      if (w[j] > w[j + 1]) {
        pos = j;
        if (s == RewriteStrategy::leftmost) break;
      }
    if (pos == w.size()) {
      out.add(w, coef);
      continue;
    }
    std::size_t b = w[pos], a = w[pos + 1];
    Word sw = w;
    std::swap(sw[pos], sw[pos + 1]);
    accumulate(work, sw, coef);
    for (std::size_t k = 0; k < n; ++k) {
      if (c(b, a, k).is_zero()) continue;
      Word shorter(w.begin(), w.begin() + pos);
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      accumulate(work, shorter, coef * lam() * LambdaScalar(c(b, a, k)));
    }
  }
  return out;
}

Vec omega_word(const Word& w, const PreLieProduct& x) {
  if (w.empty()) throw std::invalid_argument("omega is defined on the augmentation ideal only");
  Dense3 xi(x.xi);
  std::size_t n = x.dim;
  Vec v = unit_vec(n, w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) v = Scalar(-1) * xi.apply(unit_vec(n, w[i]), v);
  return v;
}

EnvelopingCalculus::EnvelopingCalculus(LieAlgebra m, PreLieProduct x) {
  if (m.dim != x.dim) throw std::invalid_argument("pre-Lie product and Lie algebra dimensions differ");
  for (const auto& c : check_lie_algebra(m).checks) require_check(c);
  require_check(check_left_symmetry(x));
  require_check(check_compatibility(x, m));
  *this = unchecked(std::move(m), std::move(x));
}

EnvelopingCalculus EnvelopingCalculus::unchecked(LieAlgebra m, PreLieProduct x) {
  if (m.dim != x.dim) throw std::invalid_argument("pre-Lie product and Lie algebra dimensions differ");
  EnvelopingCalculus calc;
  calc.c_ = Dense3(m.bracket);
  calc.xi_ = Dense3(x.xi);
  calc.m_ = std::move(m);
  calc.x_ = std::move(x);
  return calc;
}

const NCElement& EnvelopingCalculus::cached_nf(const Word& w) const {
  auto it = nf_cache_.find(w);
  if (it != nf_cache_.end()) return it->second;
  return nf_cache_.emplace(w, plk::normal_form(w, m_)).first->second;
}

NCElement EnvelopingCalculus::normal_form(const NCElement& e) const {
  NCElement out;
  for (const auto& [w, c] : e.terms()) out += cached_nf(w) * c;
  return out;
}

NCElement EnvelopingCalculus::multiply(const NCElement& a, const NCElement& b) const {
  return normal_form(concat(a, b));
}

FormElement EnvelopingCalculus::normal_form(const FormElement& f) const {
  FormElement out;
  for (const auto& [k, c] : f.terms())
    for (const auto& [w, e] : cached_nf(k.first).terms()) out.add(w, k.second, c * e);
  return out;
}

std::map<FormMono, LambdaScalar> EnvelopingCalculus::act(const FormMono& w, std::size_t x) const {
  std::map<FormMono, LambdaScalar> out;
  std::size_t n = dim();
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& v = xi_(x, w[j], k);
      if (v.is_zero()) continue;
      FormMono r = w;
      r[j] = k;
      int sign = canonical(r);
      if (sign == 0) continue;
      accumulate(out, r, -lam() * LambdaScalar(v * Scalar(sign)));
    }
  return out;
}

FormElement EnvelopingCalculus::multiply(const FormElement& a, const FormElement& b) const {
  FormElement raw;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const Word& v = kb.first;
      LambdaScalar c = ca * cb;
      // omega . v = sum_S v_{S^c} (omega <| v_S)
      for (unsigned mask = 0; mask < (1u << v.size()); ++mask) {
        std::map<FormMono, LambdaScalar> om{{ka.second, 1}};
        for (std::size_t i = 0; i < v.size() && !om.empty(); ++i) {
          if (!(mask >> i & 1u)) continue;
          std::map<FormMono, LambdaScalar> next;
          for (const auto& [fm, fc] : om)
            for (const auto& [g, gc] : act(fm, v[i])) accumulate(next, g, fc * gc);
          om = std::move(next);
        }
        if (om.empty()) continue;
        Word u = cat_words(ka.first, subword(v, mask, false));
        for (const auto& [fm, fc] : om) {
          FormMono out;
          int sign = wedge_sign(fm, kb.second, out);
          if (sign != 0) raw.add(u, out, c * fc * LambdaScalar(Scalar(sign)));
        }
      }
    }
  return normal_form(raw);
}

FormElement EnvelopingCalculus::d(const NCElement& e) const {
  FormElement raw;
  std::size_t n = dim();
  for (const auto& [w, c] : e.terms()) {
    std::size_t len = w.size();
    // mask selects the letters kept in front; the rest go into omega
    for (unsigned mask = 0; mask + 1 < (1u << len); ++mask) {
      Word rest = subword(w, mask, false);
      Vec om = omega_word(rest, x_);
      LambdaScalar cl = c * lam_pow(rest.size() - 1);
      Word front = subword(w, mask, true);
      for (std::size_t k = 0; k < n; ++k)
        if (!om[k].is_zero()) raw.add(front, {k}, cl * LambdaScalar(om[k]));
    }
  }
  return normal_form(raw);
}

FormElement EnvelopingCalculus::d(const FormElement& f) const {
  FormElement raw;
  for (const auto& [k, c] : f.terms()) {
    FormElement du = d(NCElement::word(k.first));
    for (const auto& [dk, dc] : du.terms()) {
      FormMono out;
      int sign = wedge_sign(dk.second, k.second, out);
      if (sign != 0) raw.add(dk.first, out, c * dc * LambdaScalar(Scalar(sign)));
    }
  }
  return raw;
}

std::vector<Word> all_words(std::size_t dim, std::size_t len) {
  std::vector<Word> out{{}};
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t a = 0; a < dim; ++a) {
        Word v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Word> pbw_words(std::size_t dim, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len)
    for (auto& w : all_words(dim, len))
      if (std::is_sorted(w.begin(), w.end())) out.push_back(std::move(w));
  return out;
}

namespace {

std::vector<std::size_t> pair_witness(const Word& u, const Word& v) {
  std::vector<std::size_t> t{u.size()};
  t.insert(t.end(), u.begin(), u.end());
  t.insert(t.end(), v.begin(), v.end());
  return t;
}

Vec xi_vec(const EnvelopingCalculus& calc, std::size_t a, std::size_t b) {
  std::size_t n = calc.dim();
  return calc.prelie().mul(unit_vec(n, a), unit_vec(n, b));
}

NCElement linear(const Vec& v) {
  NCElement e;
  for (std::size_t k = 0; k < v.size(); ++k) e.add({k}, LambdaScalar(v[k]));
  return e;
}

}  // namespace

Report check_first_order(const LieAlgebra& m, const PreLieProduct& x, std::size_t max_len) {
  require_check(check_compatibility(x, m));
  EnvelopingCalculus calc = EnvelopingCalculus::unchecked(m, x);
  std::size_t n = m.dim;
  Report rep("first_order_calculus");
  Check wd("well_defined"), lb("leibniz"), rel("relations"), fo("first_order");

  std::vector<Word> words;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (auto& w : all_words(n, len)) words.push_back(std::move(w));
  for (const auto& w : words) {
    NCElement e = NCElement::word(w);
    wd.require(calc.d(e) == calc.d(calc.normal_form(e)), w);
  }
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > max_len) continue;
      NCElement eu = NCElement::word(u), ev = NCElement::word(v);
      FormElement lhs = calc.d(calc.multiply(eu, ev));
      FormElement rhs = calc.multiply(calc.d(eu), FormElement::function(ev)) +
                        calc.multiply(FormElement::function(eu), calc.d(ev));
      lb.require(lhs == rhs, pair_witness(u, v));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      NCElement r = NCElement::word({a, b}) - NCElement::word({b, a}) -
                    linear(m.br(unit_vec(n, a), unit_vec(n, b))) * lam();
      rel.require(calc.d(r).is_zero(), {a, b});
      FormElement fa = FormElement::function(NCElement::word({a})), db = FormElement::term({}, {b});
      FormElement comm = calc.multiply(fa, db) - calc.multiply(db, fa);
      fo.require(comm == calc.d(linear(xi_vec(calc, a, b))) * lam(), {a, b});
    }
  rep.add(wd);
  rep.add(lb);
  rep.add(rel);
  rep.add(fo);
  return rep;
}

Report check_exterior(const EnvelopingCalculus& calc, std::size_t max_len) {
  std::size_t n = calc.dim();
  Report rep("exterior_calculus");
  Check dd("d_squared"), gl("graded_leibniz"), as("associative");
  std::vector<Word> pbw = pbw_words(n, max_len);
  for (const auto& w : pbw) {
    FormElement f = calc.d(NCElement::word(w));
    dd.require(calc.d(f).is_zero(), w);
    if (w.size() < max_len)
      for (std::size_t a = 0; a < n; ++a) dd.require(calc.d(calc.d(FormElement::term(w, {a}))).is_zero(), w);
  }
  std::vector<FormMono> monos{{}};
  for (std::size_t a = 0; a < n; ++a) monos.push_back({a});
  for (const auto& u : pbw)
    for (const auto& v : pbw) {
      if (u.size() + v.size() > max_len) continue;
      for (const auto& om : monos)
        for (const auto& et : monos) {
          FormElement xi = FormElement::term(u, om), eta = FormElement::term(v, et);
          FormElement lhs = calc.d(calc.multiply(xi, eta));
          FormElement rhs = calc.multiply(calc.d(xi), eta);
          FormElement second = calc.multiply(xi, calc.d(eta));
          if (om.size() % 2)
            rhs -= second;
          else
            rhs += second;
          gl.require(lhs == rhs, pair_witness(u, v));
        }
    }
  // Associativity on generators and their differentials.
  std::vector<FormElement> gens{FormElement::term({}, {})};
  for (std::size_t a = 0; a < n; ++a) {
    gens.push_back(FormElement::term({a}, {}));
    gens.push_back(FormElement::term({}, {a}));
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        FormElement l = calc.multiply(calc.multiply(gens[i], gens[j]), gens[k]);
        FormElement r = calc.multiply(gens[i], calc.multiply(gens[j], gens[k]));
        as.require(l == r, {i, j, k});
      }
  rep.add(dd);
  rep.add(gl);
  rep.add(as);
  return rep;
}

KernelResult kernel_of_d(const EnvelopingCalculus& calc, std::size_t n, const Scalar& lambda_value) {
  if (lambda_value.is_zero()) throw std::invalid_argument("kernel_of_d needs a nonzero lambda");
  KernelResult res;
  res.pbw_basis = pbw_words(calc.dim(), n);
  std::map<FormElement::Key, std::size_t> rows;
  std::vector<FormElement> cols;
  for (const auto& w : res.pbw_basis) {
    cols.push_back(calc.d(NCElement::word(w)));
    for (const auto& [k, c] : cols.back().terms()) rows.emplace(k, rows.size());
  }
  Matrix mat(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : cols[j].terms()) mat(rows.at(k), j) = c.eval(lambda_value);
  if (rows.empty()) {
    for (std::size_t j = 0; j < cols.size(); ++j) res.basis.push_back(unit_vec(cols.size(), j));
  } else {
    res.basis = linear_kernel(mat);
  }
  res.dimension = res.basis.size();
  return res;
}

}  // namespace plk
