#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "plk/scalar.hpp"

namespace plk {

using Index = std::vector<std::size_t>;

// Sparse multi-index array over Scalar.  Zero entries are never stored.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape);

  std::size_t rank() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t extent(std::size_t axis) const { return shape_.at(axis); }

  Scalar get(const Index& idx) const;
  void set(const Index& idx, const Scalar& v);
  void add(const Index& idx, const Scalar& v);

  // Rank-3 shorthand.
  Scalar operator()(std::size_t i, std::size_t j, std::size_t k) const { return get({i, j, k}); }

  const std::map<Index, Scalar>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

 private:
  void check_index(const Index& idx) const;
  std::vector<std::size_t> shape_;
  std::map<Index, Scalar> entries_;
};

// Contract axis p.first of a with axis p.second of b for each pair.  Free
// axes of a come first in the result, then free axes of b, each in order.
// Throws std::invalid_argument on dimension mismatch or repeated axes.
Tensor tensor_contract(const Tensor& a, const Tensor& b,
                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

// Outer product with the same axis ordering convention.
Tensor tensor_outer(const Tensor& a, const Tensor& b);

Tensor kronecker_delta(std::size_t n);
Tensor vector_tensor(const std::vector<Scalar>& v);

}  // namespace plk
