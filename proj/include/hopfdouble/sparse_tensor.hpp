#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hopfdouble/scalar.hpp"

namespace hopfdouble {

/// One stored coefficient of a rank-3 tensor.
struct TensorEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar value;
};

/// Sparse rank-3 tensor T[i][j][k]. Entries are kept sorted by (i,j,k) with
/// a row index over i, so slices T[i][.][.] and T[i][j][.] are contiguous.
/// Only nonzero coefficients are stored.
class SparseTensor3 {
 public:
  SparseTensor3() = default;
  SparseTensor3(std::array<int, 3> dims, std::vector<TensorEntry> entries);

  const std::array<int, 3>& dims() const { return dims_; }
  std::size_t nnz() const { return entries_.size(); }
  std::span<const TensorEntry> entries() const { return entries_; }

  /// All entries with first index i.
  std::span<const TensorEntry> slice(int i) const;
  /// All entries with first indices (i,j).
  std::span<const TensorEntry> slice(int i, int j) const;
  Scalar at(int i, int j, int k) const;

  friend bool operator==(const SparseTensor3& a, const SparseTensor3& b);

 private:
  std::array<int, 3> dims_{0, 0, 0};
  std::vector<TensorEntry> entries_;
  std::vector<std::size_t> row_start_;
};

/// Sparse element of a tensor square V (x) W, keyed by basis pairs.
using Tensor2 = std::map<std::pair<int, int>, Scalar>;
/// Sparse element of a triple tensor product.
using Tensor3 = std::map<std::array<int, 3>, Scalar>;

void add_to(Tensor2& t, int a, int b, const Scalar& v);
void add_to(Tensor3& t, int a, int b, int c, const Scalar& v);
/// Drops zero coefficients left by cancellation.
void prune(Tensor2& t);
void prune(Tensor3& t);
bool tensor_equal(Tensor2 a, Tensor2 b);
bool tensor_equal(Tensor3 a, Tensor3 b);
Tensor2 flip(const Tensor2& t);

}  // namespace hopfdouble
