#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hopfdouble/matrix.hpp"
#include "hopfdouble/scalar.hpp"

namespace hopfdouble {

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Incremental row echelon form over the rationals, computed without
/// fractions: every row is scaled to a primitive integer vector on entry and
/// elimination uses integer cross-multiplication followed by content removal.
/// Rows are sparse, and only one pivot row per leading column is kept, so a
/// tall system costs memory proportional to its rank.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row was independent of the rows inserted so far.
  bool insert(const Vec& row);
  bool insert(const SparseRow& row);
  /// Whether v lies in the span of the inserted rows.
  bool contains(const Vec& v) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t> pivot_columns() const;

  /// Basis of { x : r.x = 0 for every inserted row r }. One vector per free
  /// column, scaled to a primitive integer vector that is +1-positive at its
  /// free column; ordered by free column.
  std::vector<Vec> kernel() const;

 private:
  using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;
  static IntRow to_int_row(const SparseRow& row);
  IntRow reduce(IntRow row) const;
  bool insert_int(IntRow row);

  std::size_t cols_;
  std::map<std::size_t, IntRow> pivots_;  // leading column -> row
};

/// Kernel basis of M (vectors v with M v = 0).
std::vector<Vec> nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vec>& rows);
/// Indices of a maximal independent subfamily, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors);
/// Coefficients c with sum c_k basis[k] = v, if v is in the span. The basis
/// must be linearly independent.
std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v);
/// Primitive integer multiple of v whose last nonzero entry is positive.
Vec normalize_last_positive(const Vec& v);

}  // namespace hopfdouble
