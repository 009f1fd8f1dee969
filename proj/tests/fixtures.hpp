#pragma once

#include "hopfdouble/finite_group.hpp"
#include "hopfdouble/hochschild.hpp"

namespace fixtures {

using namespace hopfdouble;

// Sweedler's four-dimensional algebra, basis 1, g, x, gx with
// g^2 = 1, x^2 = 0, xg = -gx, g group-like and x (g,1)-primitive.
inline HopfData sweedler_data() {
  HopfData h;
  h.dim = 4;
  h.labels = {"1", "g", "x", "gx"};
  std::vector<TensorEntry> m = {
      {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1},
      {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 2, 3, 1}, {1, 3, 2, 1},
      {2, 0, 2, 1}, {2, 1, 3, -1},
      {3, 0, 3, 1}, {3, 1, 2, -1},
  };
  std::vector<TensorEntry> c = {
      {0, 0, 0, 1}, {1, 1, 1, 1}, {2, 2, 0, 1}, {2, 1, 2, 1}, {3, 3, 1, 1}, {3, 0, 3, 1},
  };
  h.mult = SparseTensor3({4, 4, 4}, m);
  h.comult = SparseTensor3({4, 4, 4}, c);
  h.counit = {1, 1, 0, 0};
  h.unit = {1, 0, 0, 0};
  h.antipode = Matrix(4, 4);
  h.antipode(0, 0) = 1;
  h.antipode(1, 1) = 1;
  h.antipode(2, 3) = -1;
  h.antipode(3, 2) = 1;
  return h;
}

inline HopfPtr sweedler() { return HopfAlgebra::create(sweedler_data()); }

inline FiniteGroup s3() { return group_from_generators("(12),(123)"); }

// F(Z2) written out by hand, basis delta_e, delta_u.
inline HopfData fz2_data() {
  HopfData h;
  h.dim = 2;
  h.labels = {"d_e", "d_c1"};
  h.mult = SparseTensor3({2, 2, 2}, {{0, 0, 0, 1}, {1, 1, 1, 1}});
  h.comult = SparseTensor3({2, 2, 2}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}});
  h.counit = {1, 0};
  h.unit = {1, 1};
  h.antipode = Matrix::identity(2);
  return h;
}

inline SparseTensor3 with_entry_scaled(const SparseTensor3& t, std::size_t k, const Scalar& factor) {
  std::vector<TensorEntry> e(t.entries().begin(), t.entries().end());
  e.at(k).value *= factor;
  return SparseTensor3(t.dims(), std::move(e));
}

// The restriction of the transposition-class permutation representation
// of S3 to the sum-zero sublattice, basis w1 - w2, w2 - w3: the
// two-dimensional standard representation.
inline Matrix restrict_to_sum_zero(const Matrix& p) {
  // p b_k expressed in b_1 = (1,-1,0), b_2 = (0,1,-1): coordinates (x0, x0 + x1).
  Matrix m(2, 2);
  for (std::size_t k = 0; k < 2; ++k) {
    Vec b(3);
    b[k] = 1;
    b[k + 1] = -1;
    Vec pb = p.apply(b);
    m(0, k) = pb[0];
    m(1, k) = pb[0] + pb[1];
  }
  return m;
}

inline DoubleRepresentation s3_class_rep(int k) {
  FiniteGroup g = s3();
  return class_representation(DrinfeldDouble::build(function_hopf(g)), g, conjugacy_classes(g)[static_cast<std::size_t>(k)]);
}

// rho|_F = eps * I_2 and rho|_U the two-dimensional standard representation.
inline DoubleRepresentation standard_rep() {
  DoubleRepresentation perm = s3_class_rep(1);
  const HopfAlgebra& f = *perm.D->F();
  DoubleRepresentation rho{perm.D, 2, {}, {}};
  for (int a = 0; a < f.dim(); ++a) rho.rhoF.push_back(f.counit(f.basis(a)) * Matrix::identity(2));
  for (const auto& p : perm.rhoU) rho.rhoU.push_back(restrict_to_sum_zero(p));
  return rho;
}

}  // namespace fixtures
