#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfdouble/matrix.hpp"
#include "hopfdouble/report.hpp"
#include "hopfdouble/scalar.hpp"
#include "hopfdouble/sparse_tensor.hpp"

namespace hopfdouble {

/// Raw structure constants of a finite-dimensional Hopf algebra in a basis e_A:
///   e_A e_B = mult[A][B][C] e_C
///   Delta(e_A) = comult[A][B][C] e_B (x) e_C
///   S(e_A) = antipode(A,B) e_B
///   1 = unit[A] e_A,   epsilon(e_A) = counit[A]
struct HopfData {
  int dim = 0;
  std::vector<std::string> labels;
  SparseTensor3 mult;
  SparseTensor3 comult;
  Vec counit;
  Matrix antipode;
  Vec unit;
};

/// Checks every Hopf algebra axiom exactly, quantified over all basis
/// indices. Throws DimensionMismatch when the tensors are not even
/// shape-consistent.
Report verify_hopf_axioms(const HopfData& data);

class AxiomFailure : public Error {
 public:
  explicit AxiomFailure(Report report);
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// A verified Hopf algebra. Instances are immutable and shared; the axiom
/// report is computed once at construction.
class HopfAlgebra {
 public:
  /// Verifies the data and throws AxiomFailure if any axiom fails.
  /// `predual` is set for algebras built as the dual of another one.
  static std::shared_ptr<const HopfAlgebra> create(HopfData data,
                                                   std::shared_ptr<const HopfAlgebra> predual = nullptr);

  int dim() const { return data_.dim; }
  const HopfData& data() const { return data_; }
  const std::string& label(int i) const { return data_.labels.at(static_cast<std::size_t>(i)); }
  const Report& axiom_report() const { return report_; }
  const Matrix& antipode_inverse() const { return antipode_inverse_; }
  /// The algebra this one is the dual of, or null.
  const std::shared_ptr<const HopfAlgebra>& predual() const { return predual_; }

  Vec one() const { return data_.unit; }
  Vec basis(int i) const { return unit_vec(static_cast<std::size_t>(dim()), static_cast<std::size_t>(i)); }

  Vec multiply(const Vec& x, const Vec& y) const;
  Tensor2 coproduct(const Vec& x) const;
  /// (id (x) Delta) Delta x.
  Tensor3 coproduct2(const Vec& x) const;
  Scalar counit(const Vec& x) const { return dot(data_.counit, x); }
  Vec antipode(const Vec& x) const;
  Vec antipode_inv(const Vec& x) const;
  /// Product of two elements of H (x) H, legwise.
  Tensor2 multiply(const Tensor2& x, const Tensor2& y) const;

  bool is_commutative() const;
  bool is_cocommutative() const;

 private:
  HopfAlgebra(HopfData data, Report report, std::shared_ptr<const HopfAlgebra> predual);

  HopfData data_;
  Report report_;
  Matrix antipode_inverse_;
  std::shared_ptr<const HopfAlgebra> predual_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Element of a specific Hopf algebra.
struct AlgebraElement {
  HopfPtr parent;
  Vec coords;

  static AlgebraElement basis(const HopfPtr& h, int i) { return {h, h->basis(i)}; }
  static AlgebraElement one(const HopfPtr& h) { return {h, h->one()}; }
  static AlgebraElement zero(const HopfPtr& h) { return {h, Vec(static_cast<std::size_t>(h->dim()))}; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.parent == b.parent && a.coords == b.coords;
  }
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);

/// The dual U = F* as it sits inside the Drinfeld double: product dual to
/// the coproduct of F, and the *opposite* of the coproduct dual to the
/// product of F, with antipode (S^{-1})^t. Its basis e^A is dual to e_A.
HopfPtr dual_hopf(const HopfPtr& f);

/// <f, a> for f in U = dual_hopf(F), a in F.
Scalar pair(const AlgebraElement& f, const AlgebraElement& a);
/// f*a = sum a_(1) <f, a_(2)>.
AlgebraElement star_left(const AlgebraElement& f, const AlgebraElement& a);
/// a*f = sum <f, a_(1)> a_(2).
AlgebraElement star_right(const AlgebraElement& a, const AlgebraElement& f);

/// Coproduct of U dual to the product of F (undoing the opposite convention
/// of the stored U): <X, ab> = <X_(1), a><X_(2), b>.
Tensor2 plain_coproduct(const HopfAlgebra& u, const Vec& x);
/// Antipode of U with the plain coproduct, i.e. S^t.
Vec plain_antipode(const HopfAlgebra& u, const Vec& x);

/// ad_X(Y) = sum S(X_(1)) Y X_(2) with the plain coproduct of U.
AlgebraElement adjoint_action(const AlgebraElement& x, const AlgebraElement& y);
/// ad*(a) = sum a_(2) (x) S(a_(1)) a_(3), in F (x) F.
Tensor2 ad_star(const AlgebraElement& a);
/// Ad_X(a) = (1 (x) X) ad*(a) = sum a_(2) <X, S(a_(1)) a_(3)>.
AlgebraElement big_ad(const AlgebraElement& x, const AlgebraElement& a);
/// Same as big_ad on raw coordinates of U and F.
Vec big_ad(const HopfAlgebra& f, const Vec& x, const Vec& a);

}  // namespace hopfdouble
