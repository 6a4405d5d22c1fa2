#include "plk/group_dga.hpp"

#include <algorithm>
#include <stdexcept>

namespace plk {

namespace {

int sort_sign(FormMono& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
      if (w[j - 1] == w[j]) return 0;
      std::swap(w[j - 1], w[j]);
      sign = -sign;
    }
  return sign;
}

std::vector<std::size_t> letters(const std::vector<unsigned>& exps) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (unsigned r = 0; r < exps[i]; ++r) out.push_back(i);
  return out;
}

}  // namespace

Report validate_group_data(const GroupDGAData& g) {
  Report rep("group_dga_data");
  Check shape("shape"), assoc("associativity"), ident("identity"), inv("inverses"), perm("action_permutations"),
      hom("action_homomorphism");
  std::size_t m = g.cayley.size(), n = g.theta.size();
  bool shaped = m > 0 && g.action.size() == m;
  for (const auto& row : g.cayley) shaped = shaped && row.size() == m;
  for (std::size_t a = 0; a < m && shaped; ++a)
    for (auto v : g.cayley[a]) shaped = shaped && v < m;
  for (const auto& row : g.action) shaped = shaped && row.size() == n;
  shape.require(shaped, {});
  if (!shaped) {
    rep.add(shape);
    return rep;
  }
  const auto& c = g.cayley;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t d = 0; d < m; ++d) assoc.require(c[c[a][b]][d] == c[a][c[b][d]], {a, b, d});
  std::size_t e = m;
  for (std::size_t a = 0; a < m && e == m; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < m; ++b) ok = ok && c[a][b] == b && c[b][a] == b;
    if (ok) e = a;
  }
  ident.require(e < m, {});
  for (std::size_t a = 0; a < m && e < m; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < m; ++b) found = found || (c[a][b] == e && c[b][a] == e);
    inv.require(found, {a});
  }
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<std::size_t> p = g.action[a];
    std::sort(p.begin(), p.end());
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && p[i] == i;
    perm.require(ok, {a});
  }
  if (perm.ok)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t i = 0; i < n; ++i) hom.require(g.action[c[a][b]][i] == g.action[a][g.action[b][i]], {a, b, i});
  if (e < m)
    for (std::size_t i = 0; i < n; ++i) hom.require(g.action[e][i] == i, {e, i});
  for (auto* ch : {&shape, &assoc, &ident, &inv, &perm, &hom}) rep.add(*ch);
  return rep;
}

void GroupForm::add(const GroupKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupForm& GroupForm::operator+=(const GroupForm& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

GroupForm& GroupForm::operator-=(const GroupForm& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

GroupForm& GroupForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

GroupDGA::GroupDGA(GroupDGAData data) : data_(std::move(data)) {
  for (const auto& c : validate_group_data(data_).checks) require_check(c);
  std::size_t m = order();
  for (std::size_t a = 0; a < m; ++a)
    if (data_.cayley[a][a] == a) e_ = a;
  inv_.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (data_.cayley[a][b] == e_) inv_[a] = b;
}

GroupForm GroupDGA::one() const { return group(e_); }

GroupForm GroupDGA::alpha(std::size_t i) const {
  GroupKey k{std::vector<unsigned>(n(), 0), e_, {}};
  k.exps.at(i) = 1;
  GroupForm f;
  f.add(k, 1);
  return f;
}

GroupForm GroupDGA::group(std::size_t g) const {
  if (g >= order()) throw std::out_of_range("group element index");
  GroupForm f;
  f.add({std::vector<unsigned>(n(), 0), g, {}}, 1);
  return f;
}

GroupForm GroupDGA::y(std::size_t i) const {
  if (i >= n()) throw std::out_of_range("form generator index");
  GroupForm f;
  f.add({std::vector<unsigned>(n(), 0), e_, {i}}, 1);
  return f;
}

GroupForm GroupDGA::x(std::size_t i) const {
  if (i >= n()) throw std::out_of_range("form generator index");
  GroupForm f;
  f.add({std::vector<unsigned>(n(), 0), e_, {n() + i}}, 1);
  return f;
}

GroupForm GroupDGA::x_vec(const Vec& v) const {
  GroupForm f;
  for (std::size_t i = 0; i < v.size(); ++i) f += x(i) * v[i];
  return f;
}

Vec GroupDGA::omega(std::size_t g) const {
  Vec out(n());
  const auto& p = data_.action[inv_[g]];
  for (std::size_t i = 0; i < n(); ++i) out[p[i]] += data_.theta[i];
  return out - data_.theta;
}

int GroupDGA::permute_forms(const FormMono& w, std::size_t h, FormMono& out) const {
  const auto& p = data_.action[h];
  out.clear();
  for (auto a : w) out.push_back(a < n() ? p[a] : n() + p[a - n()]);
  return sort_sign(out);
}

GroupForm GroupDGA::multiply(const GroupForm& a, const GroupForm& b) const {
  GroupForm out;
  const auto& c = data_.cayley;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      std::vector<std::size_t> L = letters(kb.exps);
      for (unsigned mask = 0; mask < (1u << L.size()); ++mask) {
        // letters in mask act on the forms of a from the right
        Scalar coef = ca * cb;
        std::vector<unsigned> exps = ka.exps;
        for (std::size_t i = 0; i < L.size(); ++i) {
          if (mask >> i & 1u) {
            bool has = std::find(ka.forms.begin(), ka.forms.end(), L[i]) != ka.forms.end();
            if (!has) {
              coef = 0;
              break;
            }
            coef = -coef;
          } else {
            ++exps[data_.action[ka.g][L[i]]];
          }
        }
        if (coef.is_zero()) continue;
        FormMono moved;
        int s1 = permute_forms(ka.forms, inv_[kb.g], moved);
        FormMono joined = moved;
        joined.insert(joined.end(), kb.forms.begin(), kb.forms.end());
        int s2 = sort_sign(joined);
        if (s1 == 0 || s2 == 0) continue;
        out.add({exps, c[ka.g][kb.g], joined}, coef * Scalar(s1 * s2));
      }
    }
  return out;
}

GroupForm GroupDGA::omega_tilde_pi(const std::vector<unsigned>& exps, std::size_t g) const {
  std::size_t nonzero = 0, idx = 0;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i]) {
      ++nonzero;
      idx = i;
    }
  if (nonzero == 0) return x_vec(omega(g));
  if (nonzero > 1) return {};
  Scalar sign = exps[idx] % 2 ? 1 : -1;
  return y(data_.action[inv_[g]][idx]) * sign;
}

GroupForm GroupDGA::d(const GroupForm& f) const {
  GroupForm out;
  for (const auto& [k, c] : f.terms()) {
    std::vector<std::size_t> L = letters(k.exps);
    // mask picks the letters passed to omega~; the rest stay in front
    for (unsigned mask = 0; mask < (1u << L.size()); ++mask) {
      std::vector<unsigned> front(n(), 0), rest(n(), 0);
      for (std::size_t i = 0; i < L.size(); ++i) ++(mask >> i & 1u ? rest : front)[L[i]];
      GroupForm w = omega_tilde_pi(rest, k.g);
      for (const auto& [wk, wc] : w.terms()) {
        FormMono joined = wk.forms;
        joined.insert(joined.end(), k.forms.begin(), k.forms.end());
        int s = sort_sign(joined);
        if (s != 0) out.add({front, k.g, joined}, c * wc * Scalar(s));
      }
    }
  }
  return out;
}

GroupForm GroupDGA::act_alpha(const GroupForm& f, std::size_t j) const {
  GroupForm out;
  for (const auto& [k, c] : f.terms())
    if (std::find(k.forms.begin(), k.forms.end(), j) != k.forms.end()) out.add(k, -c);
  return out;
}

GroupForm GroupDGA::act_group(const GroupForm& f, std::size_t g) const {
  GroupForm out;
  for (const auto& [k, c] : f.terms()) {
    FormMono moved;
    int s = permute_forms(k.forms, inv_[g], moved);
    if (s != 0) out.add({k.exps, k.g, moved}, c * Scalar(s));
  }
  return out;
}

namespace {

struct Product {
  GroupForm value;
  std::size_t grade = 0;
  std::vector<std::size_t> word;
};

}  // namespace

GroupDGACheck check_group_dga(const GroupDGA& dga, std::size_t max_len) {
  std::size_t n = dga.n(), m = dga.order(), e = dga.identity();
  GroupDGACheck res;
  Report& rep = res.report;
  rep.name = "group_dga";
  Check dd("d_squared"), lb("leibniz"), as("associative"), dg("dg_formula"), ad("alpha_dalpha"), ax("alpha_x"),
      om("omega_tilde_module"), wd("omega_tilde_well_defined");

  std::vector<Product> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back({dga.alpha(i), 0, {}});
  for (std::size_t g = 0; g < m; ++g)
    if (g != e) gens.push_back({dga.group(g), 0, {}});
  for (std::size_t i = 0; i < n; ++i) gens.push_back({dga.y(i), 1, {}});
  for (std::size_t i = 0; i < n; ++i) gens.push_back({dga.x(i), 1, {}});
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i].word = {i};

  std::vector<std::vector<Product>> by_len{{Product{dga.one(), 0, {}}}, gens};
  for (std::size_t len = 2; len <= max_len; ++len) {
    std::vector<Product> next;
    for (const auto& p : by_len[len - 1])
      for (const auto& g : gens) {
        Product q{dga.multiply(p.value, g.value), p.grade + g.grade, p.word};
        q.word.push_back(g.word[0]);
        next.push_back(std::move(q));
      }
    by_len.push_back(std::move(next));
  }
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto& p : by_len[len]) dd.require(dga.d(dga.d(p.value)).is_zero(), p.word);
  for (std::size_t lu = 1; lu < max_len; ++lu)
    for (std::size_t lv = 1; lu + lv <= max_len; ++lv)
      for (const auto& u : by_len[lu])
        for (const auto& v : by_len[lv]) {
          GroupForm lhs = dga.d(dga.multiply(u.value, v.value));
          GroupForm rhs = dga.multiply(dga.d(u.value), v.value);
          GroupForm second = dga.multiply(u.value, dga.d(v.value));
          if (u.grade % 2)
            rhs -= second;
          else
            rhs += second;
          std::vector<std::size_t> w = u.word;
          w.insert(w.end(), v.word.begin(), v.word.end());
          lb.require(lhs == rhs, w);
        }
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens)
        as.require(dga.multiply(dga.multiply(a.value, b.value), c.value) ==
                       dga.multiply(a.value, dga.multiply(b.value, c.value)),
                   {a.word[0], b.word[0], c.word[0]});

  for (std::size_t g = 0; g < m; ++g)
    dg.require(dga.d(dga.group(g)) == dga.multiply(dga.group(g), dga.x_vec(dga.omega(g))), {g});
  for (std::size_t i = 0; i < n; ++i) {
    ad.require(dga.d(dga.alpha(i)) == dga.y(i), {i});
    for (std::size_t j = 0; j < n; ++j) {
      GroupForm dj = dga.d(dga.alpha(j));
      GroupForm comm = dga.multiply(dga.alpha(i), dj) - dga.multiply(dj, dga.alpha(i));
      ad.require(comm == (i == j ? dga.d(dga.alpha(i)) : GroupForm{}), {i, j});
      GroupForm cx = dga.multiply(dga.alpha(i), dga.x(j)) - dga.multiply(dga.x(j), dga.alpha(i));
      ax.require(cx.is_zero(), {i, j});
    }
  }

  // omega~ on an element of the augmentation ideal.
  auto omega_tilde = [&](const GroupForm& z) {
    GroupForm out;
    for (const auto& [k, c] : z.terms()) out += dga.omega_tilde_pi(k.exps, k.g) * c;
    return out;
  };
  // a runs over alpha_i and g, with pi(g) = g - e; b over alpha_j and h.
  struct Gen {
    bool is_alpha;
    std::size_t idx;
  };
  std::vector<Gen> small;
  for (std::size_t i = 0; i < n; ++i) small.push_back({true, i});
  for (std::size_t g = 0; g < m; ++g) small.push_back({false, g});
  auto elem = [&](const Gen& g) { return g.is_alpha ? dga.alpha(g.idx) : dga.group(g.idx); };
  for (const auto& a : small)
    for (const auto& b : small) {
      GroupForm pa = elem(a);
      if (!a.is_alpha) pa -= dga.one();
      GroupForm lhs = omega_tilde(dga.multiply(pa, elem(b)));
      GroupForm wa = omega_tilde(pa);
      GroupForm rhs = b.is_alpha ? dga.act_alpha(wa, b.idx) : dga.act_group(wa, b.idx);
      om.require(lhs == rhs, {a.is_alpha, a.idx, b.is_alpha, b.idx});
    }
  // omega~(h alpha_j) read through the relation h alpha_j = (h |> alpha_j) h.
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t j = 0; j < n; ++j) {
      GroupForm via_module = dga.act_alpha(dga.x_vec(dga.omega(h)), j) + dga.y(j);
      GroupForm via_relation = omega_tilde(dga.multiply(dga.group(h), dga.alpha(j)));
      wd.require(via_module == via_relation, {h, j});
    }
  for (auto* c : {&dd, &lb, &as, &dg, &ad, &ax, &om, &wd}) rep.add(*c);

  Matrix w(m, n);
  for (std::size_t g = 0; g < m; ++g) {
    Vec v = dga.omega(g);
    for (std::size_t i = 0; i < n; ++i) w(g, i) = v[i];
  }
  res.omega_rank = matrix_rank(w);
  if (res.omega_rank < n)
    res.warning = "omega: (kG)^+ -> kX has rank " + std::to_string(res.omega_rank) + " < " + std::to_string(n) +
                  "; the calculus is not surjective onto kX";
  return res;
}

}  // namespace plk
