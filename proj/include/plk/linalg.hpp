#pragma once

#include <cstddef>
#include <vector>

#include "plk/scalar.hpp"

namespace plk {

using Vec = std::vector<Scalar>;

Vec unit_vec(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> d_;
};

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t matrix_rank(Matrix m);

// Basis of the right null space {v : m v = 0}, one vector per free column.
std::vector<Vec> linear_kernel(const Matrix& m);

// Throws std::domain_error if m is singular.
Matrix inverse(const Matrix& m);

}  // namespace plk
