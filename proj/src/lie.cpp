#include "plk/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace plk {

namespace {

void require_cube(const Tensor& t, const char* what) {
  if (t.rank() != 3 || t.extent(0) != t.extent(1) || t.extent(1) != t.extent(2))
    throw std::invalid_argument(std::string(what) + " must have shape (n,n,n)");
}

// (ad_x (x) 1 + 1 (x) ad_x) applied to an element of g (x) g.
Matrix ad_on_tensor(const Dense3& c, std::size_t x, const Matrix& t) {
  std::size_t n = c.n0();
  Matrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& v = t(a, b);
      if (v.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!c(x, a, k).is_zero()) out(k, b) += v * c(x, a, k);
        if (!c(x, b, k).is_zero()) out(a, k) += v * c(x, b, k);
      }
    }
  return out;
}

Matrix cobracket_matrix(const Dense3& d, std::size_t i) {
  std::size_t n = d.n0();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = d(i, j, k);
  return m;
}

Vec act_basis(const Dense3& a, std::size_t actor, const Vec& v) {
  Vec out(a.n2());
  for (std::size_t j = 0; j < a.n1(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t k = 0; k < a.n2(); ++k)
      if (!a(actor, j, k).is_zero()) out[k] += v[j] * a(actor, j, k);
  }
  return out;
}

Vec act_vec(const Dense3& a, const Vec& actor, const Vec& v) { return a.apply(actor, v); }

}  // namespace

Vec LieAlgebra::br(const Vec& a, const Vec& b) const { return Dense3(bracket).apply(a, b); }

LieAlgebra make_lie_algebra(Names names, const std::vector<Entry>& brackets) {
  LieAlgebra l;
  l.dim = names.size();
  l.basis_names = std::move(names);
  l.bracket = Tensor({l.dim, l.dim, l.dim});
  for (const auto& e : brackets) {
    l.bracket.add({e.i, e.j, e.k}, e.c);
    l.bracket.add({e.j, e.i, e.k}, -e.c);
  }
  return l;
}

LieAlgebra abelian_lie_algebra(Names names) { return make_lie_algebra(std::move(names), {}); }

LieCoalgebra make_lie_coalgebra(Names names, const std::vector<Entry>& wedges) {
  LieCoalgebra c;
  c.dim = names.size();
  c.basis_names = std::move(names);
  c.cobracket = Tensor({c.dim, c.dim, c.dim});
  for (const auto& e : wedges) {
    c.cobracket.add({e.i, e.j, e.k}, e.c);
    c.cobracket.add({e.i, e.k, e.j}, -e.c);
  }
  return c;
}

LieCoalgebra zero_coalgebra(Names names) { return make_lie_coalgebra(std::move(names), {}); }

LieBialgebra make_bialgebra(LieAlgebra alg, LieCoalgebra coalg) {
  if (alg.dim != coalg.dim) throw std::invalid_argument("algebra and coalgebra dimensions differ");
  return LieBialgebra{std::move(alg), std::move(coalg)};
}

LieBialgebra with_zero_cobracket(const LieAlgebra& alg) {
  return make_bialgebra(alg, zero_coalgebra(alg.basis_names));
}

Names dual_names(const Names& names) {
  Names out;
  for (const auto& n : names) {
    if (!n.empty() && n.back() == '*') out.push_back(n.substr(0, n.size() - 1));
    else out.push_back(n + "*");
  }
  return out;
}

Report check_lie_algebra(const Tensor& ct) {
  require_cube(ct, "bracket");
  Dense3 c(ct);
  std::size_t n = c.n0();
  Report rep("lie_algebra");
  Check anti("antisymmetry");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) anti.require((c(i, j, k) + c(j, i, k)).is_zero(), {i, j, k});
  Check jac("jacobi");
  // [[e_i,e_j],e_l] = sum_m c(i,j,m) c(m,l,.)
  auto nested = [&](std::size_t i, std::size_t j, std::size_t l, Vec& acc) {
    for (std::size_t m = 0; m < n; ++m) {
      if (c(i, j, m).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!c(m, l, k).is_zero()) acc[k] += c(i, j, m) * c(m, l, k);
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t l = j; l < n; ++l) {
        Vec acc(n);
        nested(i, j, l, acc);
        nested(j, l, i, acc);
        nested(l, i, j, acc);
        jac.require(is_zero(acc), {i, j, l});
      }
  rep.add(anti);
  rep.add(jac);
  return rep;
}

Tensor cobracket_transpose(const Tensor& d) {
  require_cube(d, "cobracket");
  std::size_t n = d.extent(0);
  Tensor c({n, n, n});
  for (const auto& [idx, v] : d.entries()) c.set({idx[1], idx[2], idx[0]}, v);
  return c;
}

Tensor bracket_transpose(const Tensor& c) {
  require_cube(c, "bracket");
  std::size_t n = c.extent(0);
  Tensor d({n, n, n});
  for (const auto& [idx, v] : c.entries()) d.set({idx[2], idx[0], idx[1]}, v);
  return d;
}

Report check_lie_coalgebra(const Tensor& d) {
  Report r = check_lie_algebra(cobracket_transpose(d));
  r.name = "lie_coalgebra";
  r.checks[0].name = "co_antisymmetry";
  r.checks[1].name = "co_jacobi";
  return r;
}

Check check_bialgebra_cocycle(const LieBialgebra& b) {
  if (b.algebra.dim != b.coalgebra.dim) throw std::invalid_argument("bialgebra dimension mismatch");
  Dense3 c(b.algebra.bracket), d(b.coalgebra.cobracket);
  std::size_t n = b.dim();
  Check chk("cocycle");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs(n, n);
      for (std::size_t k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) {
          Matrix dk = cobracket_matrix(d, k);
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t bb = 0; bb < n; ++bb) lhs(a, bb) += c(i, j, k) * dk(a, bb);
        }
      Matrix rhs = ad_on_tensor(c, i, cobracket_matrix(d, j)) - ad_on_tensor(c, j, cobracket_matrix(d, i));
      chk.require(lhs == rhs, {i, j});
    }
  return chk;
}

Report check_lie_bialgebra(const LieBialgebra& b) {
  Report rep("lie_bialgebra");
  for (auto& c : check_lie_algebra(b.algebra.bracket).checks) rep.add(c);
  for (auto& c : check_lie_coalgebra(b.coalgebra.cobracket).checks) rep.add(c);
  rep.add(check_bialgebra_cocycle(b));
  return rep;
}

LieAlgebra dual_lie_algebra(const LieBialgebra& b) {
  LieAlgebra l;
  l.dim = b.dim();
  l.basis_names = dual_names(b.names());
  l.bracket = cobracket_transpose(b.coalgebra.cobracket);
  return l;
}

LieBialgebra dualize(const LieBialgebra& b) {
  require_check(check_bialgebra_cocycle(b));
  LieBialgebra out;
  out.algebra = dual_lie_algebra(b);
  out.coalgebra.dim = b.dim();
  out.coalgebra.basis_names = out.algebra.basis_names;
  out.coalgebra.cobracket = bracket_transpose(b.algebra.bracket);
  return out;
}

Matrix cobracket_of(const LieCoalgebra& c, const Vec& v) {
  Dense3 d(c.cobracket);
  Matrix m(c.dim, c.dim);
  for (std::size_t i = 0; i < c.dim; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < c.dim; ++j)
      for (std::size_t k = 0; k < c.dim; ++k)
        if (!d(i, j, k).is_zero()) m(j, k) += v[i] * d(i, j, k);
  }
  return m;
}

ActionTensor::ActionTensor(std::size_t actor, std::size_t target, bool action)
    : actor_dim(actor), target_dim(target), coeffs({actor, target, target}), is_action(action) {}

Vec ActionTensor::act(const Vec& actor, const Vec& target) const {
  return Dense3(coeffs).apply(actor, target);
}

Check check_left_action(const ActionTensor& at, const LieAlgebra& actor) {
  if (at.actor_dim != actor.dim) throw std::invalid_argument("action actor dimension mismatch");
  Dense3 a(at.coeffs), c(actor.bracket);
  std::size_t n = actor.dim, p = at.target_dim;
  Check chk("left_action");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t v = 0; v < p; ++v) {
        Vec ev = unit_vec(p, v);
        Vec lhs = act_vec(a, c.slice(x, y), ev);
        Vec rhs = act_basis(a, x, act_basis(a, y, ev)) - act_basis(a, y, act_basis(a, x, ev));
        chk.require(lhs == rhs, {x, y, v});
      }
  return chk;
}

Check check_right_action(const ActionTensor& at, const LieAlgebra& actor) {
  if (at.actor_dim != actor.dim) throw std::invalid_argument("action actor dimension mismatch");
  Dense3 a(at.coeffs), c(actor.bracket);
  std::size_t n = actor.dim, p = at.target_dim;
  Check chk("right_action");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t v = 0; v < p; ++v) {
        Vec ev = unit_vec(p, v);
        Vec lhs = act_vec(a, c.slice(x, y), ev);
        Vec rhs = act_basis(a, y, act_basis(a, x, ev)) - act_basis(a, x, act_basis(a, y, ev));
        chk.require(lhs == rhs, {x, y, v});
      }
  return chk;
}

ActionTensor coadjoint_action(const LieAlgebra& l) {
  ActionTensor a(l.dim, l.dim);
  for (const auto& [idx, v] : l.bracket.entries()) a.coeffs.add({idx[0], idx[2], idx[1]}, -v);
  return a;
}

Report check_matched_pair(const MatchedPair& p) {
  std::size_t ng = p.g.dim, nm = p.m.dim;
  if (p.right_action.actor_dim != ng || p.right_action.target_dim != nm || p.left_action.actor_dim != nm ||
      p.left_action.target_dim != ng)
    throw std::invalid_argument("matched pair action dimensions do not match");
  Dense3 cg(p.g.bracket), cm(p.m.bracket), ra(p.right_action.coeffs), la(p.left_action.coeffs);
  // phi <| xi and phi |> xi on vectors.
  auto ract = [&](const Vec& phi, const Vec& xi) { return ra.apply(xi, phi); };
  auto lact = [&](const Vec& phi, const Vec& xi) { return la.apply(phi, xi); };
  Report rep("matched_pair");
  rep.add(check_right_action(p.right_action, p.g));
  rep.add(check_left_action(p.left_action, p.m));
  Check one("right_compatibility");
  for (std::size_t a = 0; a < nm; ++a)
    for (std::size_t b = a + 1; b < nm; ++b)
      for (std::size_t i = 0; i < ng; ++i) {
        Vec phi = unit_vec(nm, a), psi = unit_vec(nm, b), xi = unit_vec(ng, i);
        Vec lhs = ract(cm.apply(phi, psi), xi);
        Vec rhs = cm.apply(ract(phi, xi), psi) + cm.apply(phi, ract(psi, xi)) + ract(phi, lact(psi, xi)) -
                  ract(psi, lact(phi, xi));
        one.require(lhs == rhs, {a, b, i});
      }
  Check two("left_compatibility");
  for (std::size_t a = 0; a < nm; ++a)
    for (std::size_t i = 0; i < ng; ++i)
      for (std::size_t j = i + 1; j < ng; ++j) {
        Vec phi = unit_vec(nm, a), xi = unit_vec(ng, i), eta = unit_vec(ng, j);
        Vec lhs = lact(phi, cg.apply(xi, eta));
        Vec rhs = cg.apply(lact(phi, xi), eta) + cg.apply(xi, lact(phi, eta)) + lact(ract(phi, xi), eta) -
                  lact(ract(phi, eta), xi);
        two.require(lhs == rhs, {a, i, j});
      }
  rep.add(one);
  rep.add(two);
  return rep;
}

LieAlgebra double_cross_sum_unchecked(const MatchedPair& p) {
  std::size_t ng = p.g.dim, nm = p.m.dim, n = ng + nm;
  LieAlgebra out;
  out.dim = n;
  out.basis_names = p.g.basis_names;
  out.basis_names.insert(out.basis_names.end(), p.m.basis_names.begin(), p.m.basis_names.end());
  out.bracket = Tensor({n, n, n});
  for (const auto& [idx, v] : p.g.bracket.entries()) out.bracket.add({idx[0], idx[1], idx[2]}, v);
  for (const auto& [idx, v] : p.m.bracket.entries()) out.bracket.add({ng + idx[0], ng + idx[1], ng + idx[2]}, v);
  // [phi, xi] = phi |> xi + phi <| xi
  for (const auto& [idx, v] : p.left_action.coeffs.entries()) {
    std::size_t phi = ng + idx[0], xi = idx[1], out_k = idx[2];
    out.bracket.add({phi, xi, out_k}, v);
    out.bracket.add({xi, phi, out_k}, -v);
  }
  for (const auto& [idx, v] : p.right_action.coeffs.entries()) {
    std::size_t xi = idx[0], phi = ng + idx[1], out_k = ng + idx[2];
    out.bracket.add({phi, xi, out_k}, v);
    out.bracket.add({xi, phi, out_k}, -v);
  }
  return out;
}

LieAlgebra double_cross_sum(const MatchedPair& p) {
  Report r = check_matched_pair(p);
  for (const auto& c : r.checks) require_check(c);
  return double_cross_sum_unchecked(p);
}

LieBialgebra bicross_sum_unchecked(const BialgebraMatchedPair& p) {
  std::size_t ng = p.g.dim(), nm = p.m.dim(), n = nm + ng;
  LieBialgebra out;
  Names names = p.m.names();
  Names gd = dual_names(p.g.names());
  // In T g the dual of g* carries the names of g; prime them apart.
  for (auto& n : gd)
    while (std::find(names.begin(), names.end(), n) != names.end()) n += "'";
  names.insert(names.end(), gd.begin(), gd.end());
  out.algebra.dim = out.coalgebra.dim = n;
  out.algebra.basis_names = out.coalgebra.basis_names = names;
  Tensor& c = out.algebra.bracket = Tensor({n, n, n});
  Tensor& d = out.coalgebra.cobracket = Tensor({n, n, n});

  for (const auto& [idx, v] : p.m.algebra.bracket.entries()) c.add({idx[0], idx[1], idx[2]}, v);
  // [f^a, f^b] = sum_i dg(i,a,b) f^i
  for (const auto& [idx, v] : p.g.coalgebra.cobracket.entries())
    c.add({nm + idx[1], nm + idx[2], nm + idx[0]}, v);
  // f^a <| phi_b = sum_c <f^a, phi_b |> e_c> f^c
  for (const auto& [idx, v] : p.left_action.coeffs.entries()) {
    std::size_t b = idx[0], cc = idx[1], a = idx[2];
    c.add({nm + a, b, nm + cc}, v);
    c.add({b, nm + a, nm + cc}, -v);
  }

  for (const auto& [idx, v] : p.m.coalgebra.cobracket.entries()) d.add({idx[0], idx[1], idx[2]}, v);
  // beta(phi_b) = sum_i f^i (x) phi_b <| e_i, antisymmetrised
  for (const auto& [idx, v] : p.right_action.coeffs.entries()) {
    std::size_t i = idx[0], b = idx[1], cc = idx[2];
    d.add({b, nm + i, cc}, v);
    d.add({b, cc, nm + i}, -v);
  }
  // delta f^k = sum_ij cg(i,j,k) f^i (x) f^j
  for (const auto& [idx, v] : p.g.algebra.bracket.entries())
    d.add({nm + idx[2], nm + idx[0], nm + idx[1]}, v);
  return out;
}

LieBialgebra bicross_sum(const BialgebraMatchedPair& p) {
  LieBialgebra out = bicross_sum_unchecked(p);
  Report r = check_lie_bialgebra(out);
  for (const auto& c : r.checks) require_check(c);
  return out;
}

BialgebraMatchedPair tangent_matched_pair(const LieBialgebra& b) {
  std::size_t n = b.dim();
  BialgebraMatchedPair p;
  p.g = with_zero_cobracket(dual_lie_algebra(b));
  p.m = with_zero_cobracket(b.algebra);
  p.right_action = ActionTensor(n, n);
  p.left_action = ActionTensor(n, n);
  // e_b <| f^i = sum_c <e_b, [f^i, f^c]> e_c = sum_c d(b,i,c) e_c
  for (const auto& [idx, v] : b.coalgebra.cobracket.entries())
    p.right_action.coeffs.add({idx[1], idx[0], idx[2]}, v);
  // e_b |> f^a = ad*_{e_b} f^a
  p.left_action.coeffs = coadjoint_action(b.algebra).coeffs;
  return p;
}

BialgebraMatchedPair tm_star_matched_pair(const LieAlgebra& m) {
  std::size_t n = m.dim;
  BialgebraMatchedPair p;
  p.g = with_zero_cobracket(m);
  p.m = with_zero_cobracket(abelian_lie_algebra(dual_names(m.basis_names)));
  p.right_action = ActionTensor(n, n);
  p.left_action = ActionTensor(n, n);
  // f^b <| e_i = -ad*_{e_i} f^b = sum_k c(i,k,b) f^k
  for (const auto& [idx, v] : m.bracket.entries()) p.right_action.coeffs.add({idx[0], idx[2], idx[1]}, v);
  return p;
}

CrossedModuleResult check_crossed_module(const LieBialgebra& b, const ActionTensor& act,
                                         const ActionTensor& act_dual) {
  std::size_t n = b.dim(), p = act.target_dim;
  if (act.actor_dim != n || act_dual.actor_dim != n || act_dual.target_dim != p)
    throw std::invalid_argument("crossed module dimensions do not match");
  Dense3 c(b.algebra.bracket), d(b.coalgebra.cobracket), a(act.coeffs), ad(act_dual.coeffs);
  CrossedModuleResult res;
  res.action = check_left_action(act, b.algebra);
  res.cross = Check("almost_crossed");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t j = 0; j < p; ++j) {
        Vec v = unit_vec(p, j);
        Vec lhs(p);
        for (std::size_t q = 0; q < n; ++q) {
          if (!c(q, x, i).is_zero()) lhs = lhs + c(q, x, i) * act_basis(ad, q, v);
          if (!d(x, q, i).is_zero()) lhs = lhs + d(x, q, i) * act_basis(a, q, v);
        }
        Vec rhs = act_basis(a, x, act_basis(ad, i, v)) - act_basis(ad, i, act_basis(a, x, v));
        res.cross.require(lhs == rhs, {i, x, j});
      }
  res.dual_action = check_right_action(act_dual, dual_lie_algebra(b));
  res.dual_action.name = "dual_right_action";
  return res;
}

LieBialgebra coboundary_bialgebra(const LieAlgebra& l, const Tensor& r) {
  std::size_t n = l.dim;
  Dense3 c(l.bracket);
  LieCoalgebra co = zero_coalgebra(l.basis_names);
  for (const auto& [idx, v] : r.entries()) {
    std::size_t a = idx[0], bb = idx[1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // [e_i, e_a] (x) e_b
        if (!c(i, a, j).is_zero()) co.cobracket.add({i, j, bb}, v * c(i, a, j));
        // e_a (x) [e_i, e_b]
        if (!c(i, bb, j).is_zero()) co.cobracket.add({i, a, j}, v * c(i, bb, j));
      }
  }
  return make_bialgebra(l, co);
}

Check check_cybe(const LieAlgebra& l, const Tensor& r) {
  std::size_t n = l.dim;
  Dense3 c(l.bracket);
  std::vector<Scalar> out(n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return out[(i * n + j) * n + k]; };
  for (const auto& [i1, v1] : r.entries())
    for (const auto& [i2, v2] : r.entries()) {
      Scalar w = v1 * v2;
      std::size_t a = i1[0], b = i1[1], cc = i2[0], dd = i2[1];
      for (std::size_t k = 0; k < n; ++k) {
        if (!c(a, cc, k).is_zero()) at(k, b, dd) += w * c(a, cc, k);   // [r12, r13]
        if (!c(b, cc, k).is_zero()) at(a, k, dd) += w * c(b, cc, k);   // [r12, r23]
        if (!c(b, dd, k).is_zero()) at(a, cc, k) += w * c(b, dd, k);   // [r13, r23]
      }
    }
  Check chk("cybe");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) chk.require(at(i, j, k).is_zero(), {i, j, k});
  return chk;
}

Tensor change_basis_product(const Tensor& t, const Matrix& p) {
  Matrix q = inverse(p);
  std::size_t n = p.rows();
  Dense3 d(t);
  Tensor out({n, n, n});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec v = d.apply(p.row(a), p.row(b));
      for (std::size_t cc = 0; cc < n; ++cc) {
        Scalar s;
        for (std::size_t k = 0; k < n; ++k)
          if (!v[k].is_zero()) s += v[k] * q(k, cc);
        out.set({a, b, cc}, s);
      }
    }
  return out;
}

Tensor change_basis_coproduct(const Tensor& t, const Matrix& p) {
  Matrix q = inverse(p);
  std::size_t n = p.rows();
  Dense3 d(t);
  Tensor out({n, n, n});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      if (p(a, i).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (d(i, j, k).is_zero()) continue;
          Scalar w = p(a, i) * d(i, j, k);
          for (std::size_t b = 0; b < n; ++b) {
            if (q(j, b).is_zero()) continue;
            for (std::size_t cc = 0; cc < n; ++cc)
              if (!q(k, cc).is_zero()) out.add({a, b, cc}, w * q(j, b) * q(k, cc));
          }
        }
    }
  return out;
}

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p, Names names) {
  LieAlgebra out;
  out.dim = l.dim;
  out.basis_names = std::move(names);
  out.bracket = change_basis_product(l.bracket, p);
  return out;
}

}  // namespace plk
