#pragma once

#include <map>
#include <string>
#include <tuple>

#include "plk/enveloping.hpp"

namespace plk {

// Finite group G acting on X = {x_1..x_n}.  cayley[a][b] = ab and
// action[g][i] = j when g |> x_i = x_j.  theta is the inner element of kX.
struct GroupDGAData {
  std::string id;
  std::vector<std::vector<std::size_t>> cayley;
  std::vector<std::vector<std::size_t>> action;
  Vec theta;
};

// Group axioms for cayley, action a homomorphism into permutations, theta of size n.
Report validate_group_data(const GroupDGAData& g);

// Basis element alpha^exps g (x) w of (k[alpha] >< kG) >< Lambda(y_1..y_n, x_1..x_n).
// Form generators are indexed y_i -> i, x_i -> n + i.
struct GroupKey {
  std::vector<unsigned> exps;
  std::size_t g = 0;
  FormMono forms;
  friend bool operator<(const GroupKey& a, const GroupKey& b) {
    return std::tie(a.exps, a.g, a.forms) < std::tie(b.exps, b.g, b.forms);
  }
  friend bool operator==(const GroupKey& a, const GroupKey& b) {
    return a.exps == b.exps && a.g == b.g && a.forms == b.forms;
  }
};

class GroupForm {
 public:
  using Terms = std::map<GroupKey, Scalar>;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const GroupKey& k, const Scalar& c);

  GroupForm& operator+=(const GroupForm& o);
  GroupForm& operator-=(const GroupForm& o);
  GroupForm& operator*=(const Scalar& s);
  friend GroupForm operator+(GroupForm a, const GroupForm& b) { return a += b; }
  friend GroupForm operator-(GroupForm a, const GroupForm& b) { return a -= b; }
  friend GroupForm operator*(GroupForm a, const Scalar& s) { return a *= s; }
  friend bool operator==(const GroupForm& a, const GroupForm& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GroupForm& a, const GroupForm& b) { return !(a == b); }

 private:
  Terms terms_;
};

class GroupDGA {
 public:
  // Throws PreconditionError when validate_group_data fails.
  explicit GroupDGA(GroupDGAData data);

  const GroupDGAData& data() const { return data_; }
  std::size_t order() const { return data_.cayley.size(); }
  std::size_t n() const { return data_.theta.size(); }
  std::size_t identity() const { return e_; }
  std::size_t inverse(std::size_t g) const { return inv_[g]; }

  GroupForm one() const;
  GroupForm alpha(std::size_t i) const;
  GroupForm group(std::size_t g) const;
  GroupForm y(std::size_t i) const;
  GroupForm x(std::size_t i) const;
  // sum_i v_i x_i
  GroupForm x_vec(const Vec& v) const;
  // g^{-1} |> theta - theta in kX.
  Vec omega(std::size_t g) const;

  GroupForm multiply(const GroupForm& a, const GroupForm& b) const;
  GroupForm d(const GroupForm& f) const;
  // omega~(pi(alpha^exps g)) as a 1-form with unit coefficient.
  GroupForm omega_tilde_pi(const std::vector<unsigned>& exps, std::size_t g) const;
  // Right action of alpha_j and of g on a single 1-form generator slot.
  GroupForm act_alpha(const GroupForm& one_form, std::size_t j) const;
  GroupForm act_group(const GroupForm& one_form, std::size_t g) const;

 private:
  // Image of a form monomial under h |> with sign; 0 on repeat.
  int permute_forms(const FormMono& w, std::size_t h, FormMono& out) const;

  GroupDGAData data_;
  std::size_t e_ = 0;
  std::vector<std::size_t> inv_;
};

inline GroupDGA build_group_dga(GroupDGAData data) { return GroupDGA(std::move(data)); }

struct GroupDGACheck {
  Report report;
  std::size_t omega_rank = 0;
  std::string warning;  // set when omega: (kG)^+ -> kX is not surjective
};

// d^2 = 0, graded Leibniz and associativity on products of <= max_len
// generators; dg, [alpha_i, d alpha_j] and [alpha_i, x] relations; right
// module property and well-definedness of omega~ on generator pairs.
GroupDGACheck check_group_dga(const GroupDGA& dga, std::size_t max_len);

}  // namespace plk
