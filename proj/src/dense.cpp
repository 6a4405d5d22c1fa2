#include "plk/dense.hpp"

#include <stdexcept>

namespace plk {

Dense3::Dense3(const Tensor& t) {
  if (t.rank() != 3) throw std::invalid_argument("Dense3 needs a rank-3 tensor");
  n0_ = t.extent(0);
  n1_ = t.extent(1);
  n2_ = t.extent(2);
  v_.assign(n0_ * n1_ * n2_, Scalar());
  for (const auto& [idx, val] : t.entries()) (*this)(idx[0], idx[1], idx[2]) = val;
}

Vec Dense3::apply(const Vec& a, const Vec& b) const {
  Vec out(n2_);
  for (std::size_t i = 0; i < n0_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n1_; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < n2_; ++k) {
        const Scalar& c = (*this)(i, j, k);
        if (!c.is_zero()) out[k] += ab * c;
      }
    }
  }
  return out;
}

Vec Dense3::slice(std::size_t i, std::size_t j) const {
  Vec out(n2_);
  for (std::size_t k = 0; k < n2_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

Tensor Dense3::to_tensor() const {
  Tensor t({n0_, n1_, n2_});
  for (std::size_t i = 0; i < n0_; ++i)
    for (std::size_t j = 0; j < n1_; ++j)
      for (std::size_t k = 0; k < n2_; ++k) t.set({i, j, k}, (*this)(i, j, k));
  return t;
}

Matrix outer(const Vec& a, const Vec& b) {
  Matrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) m(i, j) = a[i] * b[j];
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) += b(i, j);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) -= b(i, j);
  return m;
}

Matrix flip(const Matrix& m) { return m.transpose(); }

bool is_zero(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace plk
