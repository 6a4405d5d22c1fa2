#include "plk/prelie.hpp"

#include <stdexcept>

namespace plk {

namespace {

void require_dim(const PreLieProduct& x, std::size_t n) {
  if (x.dim != n) throw std::invalid_argument("pre-Lie product dimension mismatch");
}

Matrix delta_dual(const Dense3& c, const Vec& phi) {
  // delta_{g*} phi = sum c(a,b,k) phi_k f^a (x) f^b
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

// Apply a bilinear table to one leg of a 2-tensor: sum t(a,b) op(u, e_a) (x) e_b.
template <class F>
Matrix on_left_leg(const Matrix& t, F op) {
  std::size_t n = t.rows();
  Matrix out(n, t.cols());
  for (std::size_t a = 0; a < n; ++a) {
    Vec img;
    for (std::size_t b = 0; b < t.cols(); ++b) {
      if (t(a, b).is_zero()) continue;
      if (img.empty()) img = op(unit_vec(n, a));
      for (std::size_t k = 0; k < n; ++k)
        if (!img[k].is_zero()) out(k, b) += t(a, b) * img[k];
    }
  }
  return out;
}

template <class F>
Matrix on_right_leg(const Matrix& t, F op) {
  return flip(on_left_leg(flip(t), op));
}

}  // namespace

PreLieProduct make_prelie(Names names, const std::vector<Entry>& products) {
  PreLieProduct x;
  x.dim = names.size();
  x.basis_names = std::move(names);
  x.xi = Tensor({x.dim, x.dim, x.dim});
  for (const auto& e : products) x.xi.add({e.i, e.j, e.k}, e.c);
  return x;
}

PreLieProduct zero_prelie(Names names) { return make_prelie(std::move(names), {}); }

Check check_left_symmetry(const PreLieProduct& x) {
  Dense3 m(x.xi);
  std::size_t n = x.dim;
  Check chk("left_symmetry");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j), el = unit_vec(n, l);
        Vec lhs = m.apply(m.slice(i, j), el) - m.apply(m.slice(j, i), el);
        Vec rhs = m.apply(ei, m.slice(j, l)) - m.apply(ej, m.slice(i, l));
        chk.require(lhs == rhs, {i, j, l});
      }
  return chk;
}

LieAlgebra commutator_bracket(const PreLieProduct& x) {
  LieAlgebra l;
  l.dim = x.dim;
  l.basis_names = x.basis_names;
  l.bracket = Tensor({x.dim, x.dim, x.dim});
  for (const auto& [idx, v] : x.xi.entries()) {
    l.bracket.add({idx[0], idx[1], idx[2]}, v);
    l.bracket.add({idx[1], idx[0], idx[2]}, -v);
  }
  return l;
}

LieAlgebra induced_bracket(const PreLieProduct& x) {
  require_check(check_left_symmetry(x));
  return commutator_bracket(x);
}

Check check_compatibility(const PreLieProduct& x, const LieAlgebra& l) {
  require_dim(x, l.dim);
  Tensor diff = commutator_bracket(x).bracket - l.bracket;
  Check chk("compatibility");
  for (const auto& [idx, v] : diff.entries()) chk.fail(idx);
  return chk;
}

Check check_flat_right_action(const PreLieProduct& x, const LieAlgebra& l) {
  require_dim(x, l.dim);
  Dense3 m(x.xi), c(l.bracket);
  std::size_t n = x.dim;
  Check chk("flat_right_action");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
        Vec lhs = m.apply(c.slice(i, j), unit_vec(n, k));
        Vec rhs = m.apply(ei, m.slice(j, k)) - m.apply(ej, m.slice(i, k));
        chk.require(lhs == rhs, {i, j, k});
      }
  return chk;
}

Check check_bicovariance(const PreLieProduct& x, const LieBialgebra& b) {
  require_dim(x, b.dim());
  Dense3 m(x.xi), c(b.algebra.bracket);
  std::size_t n = x.dim;
  Check chk("xi_bicovariance");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec phi = unit_vec(n, i), psi = unit_vec(n, j);
      Matrix dphi = delta_dual(c, phi), dpsi = delta_dual(c, psi);
      auto xi_phi = [&](const Vec& v) { return m.apply(phi, v); };
      Matrix lhs = delta_dual(c, m.slice(i, j)) - on_left_leg(dpsi, xi_phi) - on_right_leg(dpsi, xi_phi);
      Matrix rhs = on_left_leg(dphi, [&](const Vec& v) { return m.apply(v, psi); }) -
                   on_right_leg(dpsi, [&](const Vec& v) { return m.apply(v, phi); });
      chk.require(lhs == rhs, {i, j});
    }
  return chk;
}

Check check_bi_condition(const PreLieProduct& x, const LieBialgebra& b) {
  require_dim(x, b.dim());
  Dense3 m(x.xi), c(b.algebra.bracket), cd(cobracket_transpose(b.coalgebra.cobracket));
  std::size_t n = x.dim;
  Check chk("bi_condition");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec phi = unit_vec(n, i), psi = unit_vec(n, j);
      Matrix dphi = delta_dual(c, phi), dpsi = delta_dual(c, psi);
      Matrix lhs = delta_dual(c, m.slice(i, j)) -
                   on_left_leg(dphi, [&](const Vec& v) { return m.apply(v, psi); }) -
                   on_left_leg(dpsi, [&](const Vec& v) { return m.apply(phi, v); });
      Matrix rhs = on_right_leg(dpsi, [&](const Vec& v) { return cd.apply(phi, v); });
      chk.require(lhs == rhs, {i, j});
    }
  return chk;
}

Check check_crossvector_condition(const PreLieProduct& x, const LieBialgebra& b) {
  require_dim(x, b.dim());
  Dense3 m(x.xi), d(b.coalgebra.cobracket), ad(coadjoint_action(b.algebra).coeffs);
  std::size_t n = x.dim;
  auto adstar = [&](std::size_t a, const Vec& v) { return ad.apply(unit_vec(n, a), v); };
  Check chk("crossvector_condition");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec phi = unit_vec(n, i), psi = unit_vec(n, j);
        Vec lhs = adstar(a, m.slice(i, j)) - m.apply(adstar(a, phi), psi) - m.apply(phi, adstar(a, psi));
        Vec rhs(n);
        for (std::size_t q = 0; q < n; ++q)
          if (!d(a, i, q).is_zero()) rhs = rhs + d(a, i, q) * adstar(q, psi);
        chk.require(lhs == rhs, {a, i, j});
      }
  return chk;
}

ActionTensor minus_xi_action(const PreLieProduct& x) {
  ActionTensor a(x.dim, x.dim);
  a.is_action = false;
  a.coeffs = -x.xi;
  return a;
}

Check check_rmatrix_symmetric_part(const RMatrix& r) {
  const LieAlgebra& l = r.carrier.algebra;
  std::size_t n = l.dim;
  Dense3 c(l.bracket);
  Check chk("rmatrix_symmetric_part");
  for (std::size_t x = 0; x < n; ++x) {
    Matrix acc(n, n);
    for (const auto& [idx, v] : r.r.entries()) {
      std::size_t a = idx[0], b = idx[1];
      for (std::size_t k = 0; k < n; ++k) {
        if (!c(b, x, k).is_zero()) acc(a, k) += v * c(b, x, k);
        if (!c(a, x, k).is_zero()) acc(b, k) += v * c(a, x, k);
      }
    }
    chk.require(is_zero(acc), {x});
  }
  return chk;
}

PreLieProduct xi_from_rmatrix(const RMatrix& r) {
  require_check(check_rmatrix_symmetric_part(r));
  const LieAlgebra& l = r.carrier.algebra;
  std::size_t n = l.dim;
  Dense3 c(l.bracket);
  PreLieProduct x = zero_prelie(dual_names(l.basis_names));
  // Xi^{ij}_k = sum_a r(a,i) c(a,k,j)
  for (const auto& [idx, v] : r.r.entries()) {
    std::size_t a = idx[0], i = idx[1];
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!c(a, k, j).is_zero()) x.xi.add({i, j, k}, v * c(a, k, j));
  }
  return x;
}

Tensor preconnection_matrix(const PreLieProduct& x) { return x.xi; }

PreLieProduct change_basis(const PreLieProduct& x, const Matrix& p, Names names) {
  if (names.size() != x.dim) throw std::invalid_argument("basis name count mismatch");
  PreLieProduct out;
  out.dim = x.dim;
  out.basis_names = std::move(names);
  out.xi = change_basis_product(x.xi, p);
  return out;
}

PreLieProduct restrict_to(const PreLieProduct& x, const std::vector<std::size_t>& idx) {
  std::vector<long> pos(x.dim, -1);
  for (std::size_t a = 0; a < idx.size(); ++a) pos.at(idx[a]) = long(a);
  PreLieProduct out;
  out.dim = idx.size();
  for (auto i : idx) out.basis_names.push_back(x.basis_names.at(i));
  out.xi = Tensor({out.dim, out.dim, out.dim});
  Check closed("closed_subspace");
  for (const auto& [e, v] : x.xi.entries()) {
    if (pos[e[0]] < 0 || pos[e[1]] < 0) continue;
    if (pos[e[2]] < 0) {
      closed.fail(e);
      continue;
    }
    out.xi.set({std::size_t(pos[e[0]]), std::size_t(pos[e[1]]), std::size_t(pos[e[2]])}, v);
  }
  require_check(closed);
  return out;
}

Check check_commutative(const PreLieProduct& x) {
  Check chk("commutative");
  for (const auto& [idx, v] : x.xi.entries())
    chk.require(x.xi.get({idx[1], idx[0], idx[2]}) == v, idx);
  return chk;
}

Check check_associative(const PreLieProduct& x) {
  Dense3 m(x.xi);
  std::size_t n = x.dim;
  Check chk("associative");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        chk.require(m.apply(m.slice(i, j), unit_vec(n, l)) == m.apply(unit_vec(n, i), m.slice(j, l)), {i, j, l});
  return chk;
}

}  // namespace plk
