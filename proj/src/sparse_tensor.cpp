#include "hopfdouble/sparse_tensor.hpp"

#include <algorithm>
#include <string>

namespace hopfdouble {

SparseTensor3::SparseTensor3(std::array<int, 3> dims, std::vector<TensorEntry> entries)
    : dims_(dims) {
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dims[0] || e.j >= dims[1] || e.k >= dims[2])
      throw DimensionMismatch("tensor index (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                              "," + std::to_string(e.k) + ") out of range");
  }
  auto key = [](const TensorEntry& e) { return std::array<int, 3>{e.i, e.j, e.k}; };
  std::sort(entries.begin(), entries.end(),
            [&](const TensorEntry& a, const TensorEntry& b) { return key(a) < key(b); });
  for (auto& e : entries) {
    if (!entries_.empty() && key(entries_.back()) == key(e))
      entries_.back().value += e.value;
    else
      entries_.push_back(std::move(e));
  }
  std::erase_if(entries_, [](const TensorEntry& e) { return e.value.is_zero(); });
  row_start_.assign(static_cast<std::size_t>(dims_[0]) + 1, 0);
  for (const auto& e : entries_) ++row_start_[static_cast<std::size_t>(e.i) + 1];
  for (std::size_t r = 1; r < row_start_.size(); ++r) row_start_[r] += row_start_[r - 1];
}

std::span<const TensorEntry> SparseTensor3::slice(int i) const {
  if (i < 0 || i >= dims_[0]) return {};
  auto b = row_start_[static_cast<std::size_t>(i)];
  auto e = row_start_[static_cast<std::size_t>(i) + 1];
  return std::span<const TensorEntry>(entries_.data() + b, e - b);
}

std::span<const TensorEntry> SparseTensor3::slice(int i, int j) const {
  auto row = slice(i);
  auto lo = std::lower_bound(row.begin(), row.end(), j,
                             [](const TensorEntry& e, int jj) { return e.j < jj; });
  auto hi = std::upper_bound(lo, row.end(), j,
                             [](int jj, const TensorEntry& e) { return jj < e.j; });
  return std::span<const TensorEntry>(lo, hi);
}

Scalar SparseTensor3::at(int i, int j, int k) const {
  for (const auto& e : slice(i, j))
    if (e.k == k) return e.value;
  return Scalar();
}

bool operator==(const SparseTensor3& a, const SparseTensor3& b) {
  if (a.dims_ != b.dims_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t n = 0; n < a.entries_.size(); ++n) {
    const auto& x = a.entries_[n];
    const auto& y = b.entries_[n];
    if (x.i != y.i || x.j != y.j || x.k != y.k || x.value != y.value) return false;
  }
  return true;
}

void add_to(Tensor2& t, int a, int b, const Scalar& v) {
  if (v.is_zero()) return;
  t[{a, b}] += v;
}

void add_to(Tensor3& t, int a, int b, int c, const Scalar& v) {
  if (v.is_zero()) return;
  t[{a, b, c}] += v;
}

void prune(Tensor2& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second.is_zero(); });
}

void prune(Tensor3& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second.is_zero(); });
}

bool tensor_equal(Tensor2 a, Tensor2 b) {
  prune(a);
  prune(b);
  return a == b;
}

bool tensor_equal(Tensor3 a, Tensor3 b) {
  prune(a);
  prune(b);
  return a == b;
}

Tensor2 flip(const Tensor2& t) {
  Tensor2 r;
  for (const auto& [k, v] : t) r[{k.second, k.first}] = v;
  return r;
}

}  // namespace hopfdouble
