#include "plk/constructions.hpp"

#include <stdexcept>

namespace plk {

namespace {

Matrix delta_dual(const Dense3& c, const Vec& phi) {
  std::size_t n = c.n0();
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (phi[k].is_zero()) continue;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!c(a, b, k).is_zero()) m(a, b) += phi[k] * c(a, b, k);
  }
  return m;
}

template <class F>
Matrix map_left(const Matrix& t, std::size_t out_dim, F op) {
  Matrix out(out_dim, t.cols());
  for (std::size_t a = 0; a < t.rows(); ++a) {
    Vec img;
    for (std::size_t b = 0; b < t.cols(); ++b) {
      if (t(a, b).is_zero()) continue;
      if (img.empty()) img = op(a);
      for (std::size_t k = 0; k < out_dim; ++k)
        if (!img[k].is_zero()) out(k, b) += t(a, b) * img[k];
    }
  }
  return out;
}

template <class F>
Matrix map_right(const Matrix& t, std::size_t out_dim, F op) {
  return flip(map_left(flip(t), out_dim, op));
}

Names prefixed(const Names& names, const std::string& p) {
  Names out;
  for (const auto& n : names) out.push_back(p + n);
  return out;
}

void require_all(const Report& r) {
  for (const auto& c : r.checks) require_check(c);
}

}  // namespace

Check check_module_condition(const SemidirectInput& s) {
  std::size_t na = s.a.dim, nb = s.b.dim;
  if (s.action.actor_dim != na || s.action.target_dim != nb)
    throw std::invalid_argument("semidirect action dimensions do not match");
  Dense3 st(s.b.xi), act(s.action.coeffs);
  Check chk("module_condition");
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t x = 0; x < nb; ++x)
      for (std::size_t y = 0; y < nb; ++y) {
        Vec ea = unit_vec(na, a), ex = unit_vec(nb, x), ey = unit_vec(nb, y);
        Vec lhs = act.apply(ea, st.slice(x, y));
        Vec rhs = st.apply(act.apply(ea, ex), ey) + st.apply(ex, act.apply(ea, ey));
        chk.require(lhs == rhs, {a, x, y});
      }
  return chk;
}

PreLieProduct semidirect_prelie_unchecked(const SemidirectInput& s) {
  std::size_t na = s.a.dim, nb = s.b.dim, n = na + nb;
  Names names = s.b.basis_names;
  names.insert(names.end(), s.a.basis_names.begin(), s.a.basis_names.end());
  PreLieProduct out = zero_prelie(names);
  for (const auto& [idx, v] : s.b.xi.entries()) out.xi.add({idx[0], idx[1], idx[2]}, v);
  for (const auto& [idx, v] : s.a.xi.entries()) out.xi.add({nb + idx[0], nb + idx[1], nb + idx[2]}, v);
  for (const auto& [idx, v] : s.action.coeffs.entries()) out.xi.add({nb + idx[0], idx[1], idx[2]}, v);
  (void)n;
  return out;
}

PreLieProduct semidirect_prelie(const SemidirectInput& s) {
  Check la = check_left_symmetry(s.a);
  la.name = "left_symmetry_A";
  Check lb = check_left_symmetry(s.b);
  lb.name = "left_symmetry_B";
  require_check(la);
  require_check(lb);
  require_check(check_left_action(s.action, commutator_bracket(s.a)));
  require_check(check_module_condition(s));
  return semidirect_prelie_unchecked(s);
}

Check check_poisson_condition(const PreLieProduct& star, const LieAlgebra& l) {
  if (star.dim != l.dim) throw std::invalid_argument("dimension mismatch");
  Dense3 st(star.xi), c(l.bracket);
  std::size_t n = l.dim;
  Check chk("poisson_condition");
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p; q < n; ++q) {
        Vec ef = unit_vec(n, f), ep = unit_vec(n, p), eq = unit_vec(n, q);
        Vec lhs = c.apply(ef, st.slice(p, q));
        Vec rhs = st.apply(c.slice(f, p), eq) + st.apply(ep, c.slice(f, q));
        chk.require(lhs == rhs, {f, p, q});
      }
  return chk;
}

Report tangent_preconditions(const PreLieProduct& circ, const PreLieProduct& star, const LieBialgebra& b) {
  LieAlgebra gd = dual_lie_algebra(b);
  Report rep("tangent_preconditions");
  rep.add(check_commutative(star)).name = "star_commutative";
  rep.add(check_associative(star)).name = "star_associative";
  rep.add(check_poisson_condition(star, gd));
  rep.add(check_left_symmetry(circ)).name = "circ_left_symmetry";
  rep.add(check_compatibility(circ, gd)).name = "circ_compatibility";
  return rep;
}

PreLieProduct tangent_prelie(const PreLieProduct& circ, const PreLieProduct& star, const LieBialgebra& b) {
  require_all(tangent_preconditions(circ, star, b));
  LieAlgebra gd = dual_lie_algebra(b);
  SemidirectInput s;
  s.a = circ;
  s.a.basis_names = prefixed(gd.basis_names, "o.");
  s.b = star;
  s.b.basis_names = prefixed(gd.basis_names, "u.");
  s.action = ActionTensor(b.dim(), b.dim());
  s.action.coeffs = gd.bracket;
  return semidirect_prelie_unchecked(s);
}

Report check_tangent_bicovariance(const PreLieProduct& circ, const PreLieProduct& star, const LieBialgebra& b) {
  std::size_t n = b.dim();
  Dense3 c(b.algebra.bracket), cd(cobracket_transpose(b.coalgebra.cobracket)), ci(circ.xi), st(star.xi);
  Report rep("tangent_bicovariance");
  Check t1("delta_circ_zero"), t2("coaction_bracket_zero"), t3("circ_coproduct_antisymmetry"),
      t4("delta_star_zero"), t5("star_coproduct_zero");
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      Vec ef = unit_vec(n, f), eg = unit_vec(n, g);
      t1.require(is_zero(delta_dual(c, ci.slice(f, g))), {f, g});
      Matrix df = delta_dual(c, ef), dg = delta_dual(c, eg);
      t2.require(is_zero(map_right(df, n, [&](std::size_t a) { return cd.apply(unit_vec(n, a), eg); })), {f, g});
      Matrix lhs = map_left(df, n, [&](std::size_t a) { return ci.slice(a, g); });
      Matrix rhs = map_left(dg, n, [&](std::size_t a) { return ci.slice(f, a); });
      t3.require(is_zero(lhs + rhs), {f, g});
      t4.require(is_zero(delta_dual(c, st.slice(f, g))), {f, g});
      // phi * f(1) (x) f(2) with phi = e_g
      t5.require(is_zero(map_left(df, n, [&](std::size_t a) { return st.slice(g, a); })), {g, f});
    }
  rep.add(t1);
  rep.add(t2);
  rep.add(t3);
  rep.add(t4);
  rep.add(t5);
  return rep;
}

LieBialgebra tangent_bialgebra(const LieBialgebra& b) { return bicross_sum(tangent_matched_pair(b)); }

Check check_xi_ass(const PreLieProduct& x, const LieBialgebra& b) {
  std::size_t n = b.dim();
  Dense3 c(b.algebra.bracket), m(x.xi);
  Check chk("xi_ass");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Vec phi = unit_vec(n, p);
      Matrix dpsi = delta_dual(c, unit_vec(n, q));
      Matrix lhs = delta_dual(c, m.slice(p, q));
      auto op = [&](std::size_t a) { return m.apply(phi, unit_vec(n, a)); };
      Matrix rhs = map_left(dpsi, n, op) + map_right(dpsi, n, op);
      chk.require(lhs == rhs, {p, q});
    }
  return chk;
}

Check check_xi_con(const PreLieProduct& x, const LieBialgebra& b) {
  std::size_t n = b.dim();
  Dense3 c(b.algebra.bracket), m(x.xi);
  Check chk("xi_con");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Matrix dphi = delta_dual(c, unit_vec(n, p)), dpsi = delta_dual(c, unit_vec(n, q));
      Matrix lhs = map_left(dphi, n, [&](std::size_t a) { return m.slice(a, q); });
      Matrix rhs = map_right(dpsi, n, [&](std::size_t a) { return m.slice(a, p); });
      chk.require(lhs == rhs, {p, q});
    }
  return chk;
}

Report check_braided_conditions(const PreLieProduct& x, const LieBialgebra& b) {
  require_check(check_compatibility(x, dual_lie_algebra(b)));
  Report rep("braided_conditions");
  rep.add(check_xi_ass(x, b));
  rep.add(check_xi_con(x, b));
  return rep;
}

Matrix coaction_alpha(const PreLieProduct& x, const Vec& phi) {
  std::size_t n = x.dim;
  Matrix m(n, n);
  for (const auto& [idx, v] : x.xi.entries()) {
    std::size_t i = idx[0], q = idx[1], k = idx[2];
    if (!phi[q].is_zero()) m(i, k) -= phi[q] * v;
  }
  return m;
}

Tensor infinitesimal_braiding(const PreLieProduct& x, const LieBialgebra& b) {
  std::size_t n = b.dim();
  Dense3 ad(coadjoint_action(b.algebra).coeffs);
  Tensor psi({n, n, n, n});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Vec phi = unit_vec(n, p), psv = unit_vec(n, q);
      Matrix ap = coaction_alpha(x, phi), aq = coaction_alpha(x, psv);
      // ad*_{psi(1)} phi (x) psi(2) - ad*_{phi(1)} psi (x) phi(2)
      Matrix t = map_left(aq, n, [&](std::size_t i) { return ad.apply(unit_vec(n, i), phi); }) -
                 map_left(ap, n, [&](std::size_t i) { return ad.apply(unit_vec(n, i), psv); });
      Matrix out = t - flip(t);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t bb = 0; bb < n; ++bb) psi.set({p, q, a, bb}, out(a, bb));
    }
  return psi;
}

LieBialgebra bisum_bialgebra_unchecked(const PreLieProduct& x, const LieBialgebra& b) {
  std::size_t n = b.dim(), N = 2 * n;
  Names names = dual_names(b.names());
  names.insert(names.end(), b.names().begin(), b.names().end());
  LieBialgebra out;
  out.algebra.dim = out.coalgebra.dim = N;
  out.algebra.basis_names = out.coalgebra.basis_names = names;
  Tensor& c = out.algebra.bracket = Tensor({N, N, N});
  Tensor& d = out.coalgebra.cobracket = Tensor({N, N, N});
  for (const auto& [idx, v] : b.algebra.bracket.entries()) {
    std::size_t xx = idx[0], y = idx[1], k = idx[2];
    c.add({n + xx, n + y, n + k}, v);
    // [e_x, f^b] = ad*_{e_x} f^b = -sum_k c(x,k,b) f^k, here with k = y, b = k
    c.add({n + xx, k, y}, -v);
    c.add({k, n + xx, y}, v);
  }
  for (const auto& [idx, v] : b.coalgebra.cobracket.entries()) d.add({n + idx[0], n + idx[1], n + idx[2]}, v);
  for (const auto& [idx, v] : b.algebra.bracket.entries()) d.add({idx[2], idx[0], idx[1]}, v);
  for (const auto& [idx, v] : x.xi.entries()) {
    std::size_t i = idx[0], q = idx[1], k = idx[2];
    d.add({q, n + i, k}, -v);
    d.add({q, k, n + i}, v);
  }
  return out;
}

LieBialgebra bisum_bialgebra(const PreLieProduct& x, const LieBialgebra& b) {
  require_all(check_braided_conditions(x, b));
  return bisum_bialgebra_unchecked(x, b);
}

Matrix cocycle_D(const PreLieProduct& x, const LieBialgebra& b, const Vec& phi) {
  require_all(check_braided_conditions(x, b));
  std::size_t n = b.dim(), N = 2 * n;
  if (phi.size() != n) throw std::invalid_argument("phi has the wrong dimension");
  Dense3 c(b.algebra.bracket), ad(coadjoint_action(b.algebra).coeffs);
  Matrix alpha = coaction_alpha(x, phi);
  Matrix z(N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& a = alpha(i, k);
      if (a.is_zero()) continue;
      z(n + i, k) += a;
      Vec adp = ad.apply(unit_vec(n, i), phi);
      for (std::size_t j = 0; j < n; ++j)
        if (!adp[j].is_zero()) z(j, k) -= Scalar(make_rational(1, 2)) * a * adp[j];
    }
  Matrix out = z - flip(z);
  Matrix dphi = delta_dual(c, phi);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bb = 0; bb < n; ++bb) out(a, bb) += dphi(a, bb);
  return out;
}

ActionTensor xi_action(const PreLieProduct& x) {
  ActionTensor a(x.dim, x.dim);
  for (const auto& [idx, v] : x.xi.entries()) a.coeffs.add({idx[0], idx[2], idx[1]}, -v);
  return a;
}

Report cotangent_preconditions(const CotangentInput& c) {
  const LieBialgebra& b = c.carrier;
  LieAlgebra gd = dual_lie_algebra(b);
  Report rep("cotangent_preconditions");
  rep.add(check_left_symmetry(c.xi)).name = "xi_left_symmetry";
  rep.add(check_compatibility(c.xi, gd)).name = "xi_compatibility";
  rep.add(check_xi_ass(c.xi, b));
  rep.add(check_xi_con(c.xi, b));
  rep.add(check_left_symmetry(c.circ)).name = "circ_left_symmetry";
  rep.add(check_compatibility(c.circ, gd)).name = "circ_compatibility";
  rep.add(check_left_symmetry(c.star)).name = "star_left_symmetry";
  SemidirectInput s{c.circ, c.star, xi_action(c.xi)};
  rep.add(check_module_condition(s)).name = "xi_ast";
  return rep;
}

PreLieProduct cotangent_prelie(const CotangentInput& c) {
  require_all(cotangent_preconditions(c));
  SemidirectInput s{c.circ, c.star, xi_action(c.xi)};
  s.b.basis_names = c.carrier.names();
  s.a.basis_names = dual_names(c.carrier.names());
  return semidirect_prelie_unchecked(s);
}

Report check_cotangent_bicovariance(const CotangentInput& c) {
  const LieBialgebra& b = c.carrier;
  std::size_t n = b.dim();
  Dense3 cg(b.algebra.bracket), st(c.star.xi), ci(c.circ.xi), xi(c.xi.xi), ad(coadjoint_action(b.algebra).coeffs);
  auto adstar = [&](std::size_t xx, const Vec& v) { return ad.apply(unit_vec(n, xx), v); };
  Report rep("cotangent_bicovariance");
  rep.add(check_bicovariance(c.circ, b)).name = "circ_xi_bicovariance";
  rep.add(check_associative(c.star)).name = "star_associative";
  Check ast("ast"), circad("circad"), xiad("xiad");
  for (std::size_t xx = 0; xx < n; ++xx)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec lhs = st.apply(cg.slice(xx, y), unit_vec(n, z));
        Vec rhs = st.apply(cg.slice(y, z), unit_vec(n, xx));
        ast.require(lhs == rhs, {xx, y, z});
      }
  for (std::size_t xx = 0; xx < n; ++xx)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Vec phi = unit_vec(n, p), psi = unit_vec(n, q);
          // ((ad*_x psi) o phi)(y) + Xi(ad*_y phi, psi)(x)
          Scalar v1 = ci.apply(adstar(xx, psi), phi)[y] + xi.apply(adstar(y, phi), psi)[xx];
          circad.require(v1.is_zero(), {xx, y, p, q});
          // Xi(phi,psi)([x,y]) = Xi(phi, ad*_y psi)(x) - (phi o ad*_x psi)(y)
          Vec xy = cg.slice(xx, y);
          Vec val = xi.slice(p, q);
          Scalar lhs;
          for (std::size_t k = 0; k < n; ++k)
            if (!xy[k].is_zero()) lhs += val[k] * xy[k];
          Scalar rhs = xi.apply(phi, adstar(y, psi))[xx] - ci.apply(phi, adstar(xx, psi))[y];
          xiad.require(lhs == rhs, {xx, y, p, q});
        }
  rep.add(ast);
  rep.add(circad);
  rep.add(xiad);
  return rep;
}

}  // namespace plk
