#pragma once

#include <cstddef>
#include <vector>

#include "plk/linalg.hpp"
#include "plk/tensor.hpp"

namespace plk {

// Dense copy of a rank-3 tensor for tight basis loops.
class Dense3 {
 public:
  Dense3() = default;
  explicit Dense3(const Tensor& t);
  Dense3(std::size_t a, std::size_t b, std::size_t c) : n0_(a), n1_(b), n2_(c), v_(a * b * c) {}

  std::size_t n0() const { return n0_; }
  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return v_[(i * n1_ + j) * n2_ + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return v_[(i * n1_ + j) * n2_ + k]; }

  // Sum_ij a_i b_j T(i,j,.)
  Vec apply(const Vec& a, const Vec& b) const;
  // T(i,j,.)
  Vec slice(std::size_t i, std::size_t j) const;
  Tensor to_tensor() const;

 private:
  std::size_t n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<Scalar> v_;
};

// Elements of V (x) W stored as dense rows x cols matrices.
Matrix outer(const Vec& a, const Vec& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix flip(const Matrix& m);
bool is_zero(const Matrix& m);

}  // namespace plk
