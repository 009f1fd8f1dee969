#include "hopfdouble/linalg.hpp"

#include <algorithm>

namespace hopfdouble {
namespace {

void make_primitive(std::vector<std::pair<std::size_t, mpz_class>>& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

mpz_class lcm_of_denominators(const Vec& v) {
  mpz_class l = 1;
  for (const auto& x : v)
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
  return l;
}

}  // namespace

RowEchelon::IntRow RowEchelon::to_int_row(const SparseRow& row) {
  mpz_class l = 1;
  for (const auto& [c, v] : row)
    if (!v.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value().get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (v.is_zero()) continue;
    mpz_class x = l / v.value().get_den() * v.value().get_num();
    out.emplace_back(c, std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicate columns
  IntRow merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  make_primitive(merged);
  return merged;
}

RowEchelon::IntRow RowEchelon::reduce(IntRow row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const IntRow& piv = it->second;
    mpz_class p = piv.front().second;
    mpz_class r = row.front().second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), r.get_mpz_t());
    p /= g;
    r /= g;
    // row <- p*row - r*piv, merged by column
    IntRow out;
    out.reserve(row.size() + piv.size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < piv.size()) {
      if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
        out.emplace_back(row[a].first, p * row[a].second);
        ++a;
      } else if (a == row.size() || piv[b].first < row[a].first) {
        out.emplace_back(piv[b].first, -r * piv[b].second);
        ++b;
      } else {
        mpz_class v = p * row[a].second - r * piv[b].second;
        if (v != 0) out.emplace_back(row[a].first, std::move(v));
        ++a;
        ++b;
      }
    }
    make_primitive(out);
    row = std::move(out);
  }
  return row;
}

bool RowEchelon::insert_int(IntRow row) {
  for (const auto& [c, v] : row)
    if (c >= cols_) throw DimensionMismatch("row entry beyond column count");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool RowEchelon::insert(const SparseRow& row) { return insert_int(to_int_row(row)); }

bool RowEchelon::insert(const Vec& row) {
  if (row.size() != cols_) throw DimensionMismatch("row length does not match column count");
  SparseRow s;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!row[c].is_zero()) s.emplace_back(c, row[c]);
  return insert(s);
}

bool RowEchelon::contains(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match column count");
  SparseRow s;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero()) s.emplace_back(c, v[c]);
  return reduce(to_int_row(s)).empty();
}

std::vector<std::size_t> RowEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (const auto& [c, r] : pivots_) out.push_back(c);
  return out;
}

std::vector<Vec> RowEchelon::kernel() const {
  // Gauss-Jordan on the (rank x cols) pivot rows, processed from the last
  // leading column backwards so each elimination touches only later columns.
  std::vector<std::size_t> leads;
  std::vector<Vec> rows;
  for (const auto& [lead, r] : pivots_) {
    Vec dense(cols_);
    for (const auto& [c, v] : r) dense[c] = Scalar(mpq_class(v));
    Scalar inv = dense[lead].inverse();
    for (auto& x : dense)
      if (!x.is_zero()) x *= inv;
    leads.push_back(lead);
    rows.push_back(std::move(dense));
  }
  for (std::size_t k = rows.size(); k-- > 0;) {
    for (std::size_t r = 0; r < k; ++r) {
      Scalar f = rows[r][leads[k]];
      if (f.is_zero()) continue;
      axpy(-f, rows[k], rows[r]);
    }
  }
  std::vector<bool> is_pivot(cols_, false);
  for (auto l : leads) is_pivot[l] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols_);
    v[f] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!rows[r][f].is_zero()) v[leads[r]] = -rows[r][f];
    mpz_class l = lcm_of_denominators(v);
    Vec w(cols_);
    mpz_class g = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      mpz_class x = l / v[c].value().get_den() * v[c].value().get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      w[c] = Scalar(mpq_class(x));
    }
    if (g != 1 && g != 0) {
      Scalar s = Scalar(mpq_class(1, 1) / mpq_class(g));
      for (auto& x : w)
        if (!x.is_zero()) x *= s;
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<Vec> nullspace(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.kernel();
}

std::size_t rank(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

std::size_t rank(const std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  RowEchelon e(rows.front().size());
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors) {
  std::vector<std::size_t> out;
  if (vectors.empty()) return out;
  RowEchelon e(vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (e.insert(vectors[i])) out.push_back(i);
  return out;
}

std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v) {
  // Solve sum c_k b_k - t v = 0 with t = 1: kernel of the transposed system.
  const std::size_t m = basis.size();
  const std::size_t len = v.size();
  RowEchelon e(m + 1);
  for (std::size_t c = 0; c < len; ++c) {
    SparseRow row;
    for (std::size_t k = 0; k < m; ++k)
      if (!basis[k][c].is_zero()) row.emplace_back(k, basis[k][c]);
    if (!v[c].is_zero()) row.emplace_back(m, -v[c]);
    e.insert(row);
  }
  for (const auto& k : e.kernel()) {
    if (k[m].is_zero()) continue;
    Scalar t = k[m].inverse();
    Vec c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = k[i] * t;
    return c;
  }
  if (is_zero(v)) return Vec(m);
  return std::nullopt;
}

Vec normalize_last_positive(const Vec& v) {
  mpz_class l = lcm_of_denominators(v);
  Vec w(v.size());
  mpz_class g = 0;
  int last_sign = 0;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    mpz_class x = l / v[c].value().get_den() * v[c].value().get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    last_sign = sgn(x);
    w[c] = Scalar(mpq_class(x));
  }
  if (g == 0) return w;
  mpq_class s(last_sign < 0 ? -1 : 1);
  s /= mpq_class(g);
  Scalar sc{mpq_class(s)};
  for (auto& x : w)
    if (!x.is_zero()) x *= sc;
  return w;
}

}  // namespace hopfdouble
