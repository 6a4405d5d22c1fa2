#pragma once

#include <map>
#include <utility>

#include "plk/prelie.hpp"

namespace plk {

using Word = std::vector<std::size_t>;

// Finite sum of words in the generators of U_lambda(m) with LambdaScalar
// coefficients.  Zero terms are never stored.  After normal_form every word
// is weakly increasing.
class NCElement {
 public:
  using Terms = std::map<Word, LambdaScalar>;

  NCElement() = default;
  static NCElement one() { return word({}); }
  static NCElement word(const Word& w, const LambdaScalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_normal() const;
  void add(const Word& w, const LambdaScalar& c);

  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  NCElement& operator*=(const LambdaScalar& s);
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator*(NCElement a, const LambdaScalar& s) { return a *= s; }
  friend NCElement operator*(const LambdaScalar& s, NCElement a) { return a *= s; }
  friend bool operator==(const NCElement& a, const NCElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCElement& a, const NCElement& b) { return !(a == b); }
  // Concatenation product, not normalized.
  friend NCElement concat(const NCElement& a, const NCElement& b);

  std::string str(const Names& names) const;

 private:
  Terms terms_;
};

// Strictly increasing indices of the form generators dx_a.
using FormMono = std::vector<std::size_t>;

// Finite sum of u (x) omega with u a word and omega a wedge monomial in the
// left-invariant 1-forms.
class FormElement {
 public:
  using Key = std::pair<Word, FormMono>;
  using Terms = std::map<Key, LambdaScalar>;

  FormElement() = default;
  static FormElement function(const NCElement& f);
  static FormElement term(const Word& u, const FormMono& w, const LambdaScalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Throws std::logic_error on mixed grade; 0 for the zero element.
  std::size_t grade() const;
  void add(const Word& u, const FormMono& w, const LambdaScalar& c);

  FormElement& operator+=(const FormElement& o);
  FormElement& operator-=(const FormElement& o);
  FormElement& operator*=(const LambdaScalar& s);
  friend FormElement operator+(FormElement a, const FormElement& b) { return a += b; }
  friend FormElement operator-(FormElement a, const FormElement& b) { return a -= b; }
  friend FormElement operator*(FormElement a, const LambdaScalar& s) { return a *= s; }
  friend FormElement operator*(const LambdaScalar& s, FormElement a) { return a *= s; }
  friend bool operator==(const FormElement& a, const FormElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FormElement& a, const FormElement& b) { return !(a == b); }

  std::string str(const Names& names) const;

 private:
  Terms terms_;
};

enum class RewriteStrategy { leftmost, rightmost };

// PBW normal form for the relations e_b e_a = e_a e_b + lambda [e_b, e_a]
// (b > a), basis order fixed by the index order of m.
NCElement normal_form(const Word& w, const LieAlgebra& m, RewriteStrategy s = RewriteStrategy::leftmost);
NCElement normal_form(const NCElement& e, const LieAlgebra& m, RewriteStrategy s = RewriteStrategy::leftmost);

// ((x_1 <| x_2) ... <| x_n) with y <| x = -x o y.  Throws on an empty word.
Vec omega_word(const Word& w, const PreLieProduct& x);

// Calculus on U_lambda(m) with left-invariant forms Lambda(m) and bimodule
// relation omega . x = x omega - lambda D_x omega, where D_x is the
// derivation extension of y -> x o y.
class EnvelopingCalculus {
 public:
  // Throws PreconditionError unless m is a Lie algebra, x is left-symmetric
  // and x is compatible with the bracket of m.
  EnvelopingCalculus(LieAlgebra m, PreLieProduct x);
  // No hypothesis checks; used to witness failures of mutated products.
  static EnvelopingCalculus unchecked(LieAlgebra m, PreLieProduct x);

  const LieAlgebra& lie() const { return m_; }
  const PreLieProduct& prelie() const { return x_; }
  std::size_t dim() const { return m_.dim; }

  NCElement normal_form(const NCElement& e) const;
  NCElement multiply(const NCElement& a, const NCElement& b) const;
  FormElement normal_form(const FormElement& f) const;
  // Graded product in Omega, result normalized.
  FormElement multiply(const FormElement& a, const FormElement& b) const;

  // Shuffle formula; the omega factor on a block of length r carries
  // lambda^(r-1).  Applied termwise to the words as stored, so raw and
  // normalized inputs can be compared.
  FormElement d(const NCElement& e) const;
  // d(u omega) = du ^ omega for left-invariant omega.
  FormElement d(const FormElement& f) const;

 private:
  EnvelopingCalculus() = default;
  // omega <| x = -lambda D_x omega on a single wedge monomial.
  std::map<FormMono, LambdaScalar> act(const FormMono& w, std::size_t x) const;
  const NCElement& cached_nf(const Word& w) const;

  LieAlgebra m_;
  PreLieProduct x_;
  Dense3 c_, xi_;
  mutable std::map<Word, NCElement> nf_cache_;
};

// out = a ^ b up to the returned sign; the sign is 0 when a generator repeats.
int wedge_sign(const FormMono& a, const FormMono& b, FormMono& out);

// Exhaustive first-order checks over all words with |u| + |v| <= max_len:
// well_defined (d of a raw word equals d of its normal form), leibniz,
// relations (d(xy - yx - lambda[x,y]) = 0), first_order ([x,dy] = lambda d(x o y)).
Report check_first_order(const LieAlgebra& m, const PreLieProduct& x, std::size_t max_len);
// d^2 = 0 on PBW words of length <= max_len and on u dx_a, graded Leibniz on
// u omega, v eta with |u| + |v| <= max_len and omega, eta of degree <= 1, and
// associativity of the product on triples of generators and their differentials.
Report check_exterior(const EnvelopingCalculus& calc, std::size_t max_len);

struct KernelResult {
  std::size_t dimension = 0;
  std::vector<Word> pbw_basis;
  std::vector<Vec> basis;  // coordinates over pbw_basis
};

// Kernel of d restricted to U_n with lambda evaluated at lambda_value.
// Throws std::invalid_argument when lambda_value is zero.
KernelResult kernel_of_d(const EnvelopingCalculus& calc, std::size_t n, const Scalar& lambda_value);

// Weakly increasing words of length <= n in dim letters, by length then lex.
std::vector<Word> pbw_words(std::size_t dim, std::size_t n);
// All words of length exactly len.
std::vector<Word> all_words(std::size_t dim, std::size_t len);

}  // namespace plk
