#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfdouble/scalar.hpp"

namespace hopfdouble {

/// Dense row-major matrix over the ground field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  /// Exact inverse; throws DivisionByZero when singular.
  Matrix inverse() const;
  bool is_zero() const;
  Vec row(std::size_t i) const;
  Vec apply(const Vec& v) const;  // M v

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product with (A (x) B)[(i,k),(j,l)] = A(i,j) B(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// Position of the first entry where the matrices differ, as "(i,j)".
std::string first_difference(const Matrix& a, const Matrix& b);

}  // namespace hopfdouble
