#pragma once

#include "hopfdouble/bicovariant.hpp"
#include "hopfdouble/linalg.hpp"

namespace oracles {

using namespace hopfdouble;

// Assembles the coproduct, counit and adjoint conditions on a tuple chi
// directly from the structure constants of F and the matrices of rho.
inline std::vector<Vec> brute_force_chi_space(const DoubleRepresentation& rho) {
  const HopfData& h = rho.D->F()->data();
  const int d = h.dim, n = rho.n;
  auto sz = [](int i) { return static_cast<std::size_t>(i); };
  const std::size_t unknowns = sz(n * d);
  auto x = [&](int i, int a) { return sz(i * d + a); };
  std::vector<Vec> rows;

  for (int i = 0; i < n; ++i)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Vec row(unknowns);
        for (int c = 0; c < d; ++c) row[x(i, c)] += h.mult.at(a, b, c);
        for (int j = 0; j < n; ++j) row[x(j, a)] -= rho.rhoF[sz(b)](sz(j), sz(i));
        row[x(i, b)] -= h.counit[sz(a)];
        rows.push_back(std::move(row));
      }
  for (int i = 0; i < n; ++i) {
    Vec row(unknowns);
    for (int a = 0; a < d; ++a) row[x(i, a)] = h.unit[sz(a)];
    rows.push_back(std::move(row));
  }

  // <e^B, S(e_p) e_r>
  auto pair_sr = [&](int bidx, int p, int r) {
    Scalar s;
    for (int t = 0; t < d; ++t) s += h.antipode(sz(p), sz(t)) * h.mult.at(t, r, bidx);
    return s;
  };
  for (int bidx = 0; bidx < d; ++bidx)
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < d; ++a) {
        Vec row(unknowns);
        for (int p = 0; p < d; ++p)
          for (int t = 0; t < d; ++t) {
            Scalar c1 = h.comult.at(a, p, t);
            if (c1.is_zero()) continue;
            for (int q = 0; q < d; ++q)
              for (int r = 0; r < d; ++r) {
                Scalar c2 = h.comult.at(t, q, r);
                if (c2.is_zero()) continue;
                row[x(i, q)] += c1 * c2 * pair_sr(bidx, p, r);
              }
          }
        for (int k = 0; k < n; ++k) {
          Scalar rik;
          for (int c = 0; c < d; ++c) rik += h.antipode(sz(c), sz(bidx)) * rho.rhoU[sz(c)](sz(k), sz(i));
          row[x(k, a)] -= rik;
        }
        rows.push_back(std::move(row));
      }

  Matrix m(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) m(r, c) = rows[r][c];
  return nullspace(m);
}

}  // namespace oracles
