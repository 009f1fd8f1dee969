#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hopfdouble/hopf_algebra.hpp"

namespace hopfdouble {

/// The quantum double D = F (x) U with U = dual_hopf(F). The basis element
/// e_A (x) e^B has index A * dim(F) + B. D is materialized as a verified
/// HopfAlgebra; F and U embed as a (x) 1 and 1 (x) X.
class DrinfeldDouble {
 public:
  static std::shared_ptr<const DrinfeldDouble> build(const HopfPtr& f);

  const HopfPtr& F() const { return f_; }
  const HopfPtr& U() const { return u_; }
  /// D as a Hopf algebra in its own right.
  const HopfPtr& hopf() const { return d_; }

  int base_dim() const { return f_->dim(); }
  int dim() const { return d_->dim(); }
  int index(int a, int x) const { return a * base_dim() + x; }
  std::pair<int, int> split(int i) const { return {i / base_dim(), i % base_dim()}; }

  Vec embed_F(const Vec& a) const;
  Vec embed_U(const Vec& x) const;
  /// Coordinates of a (x) X.
  Vec tensor(const Vec& a, const Vec& x) const;

  /// The product X a written in the ordered basis F (x) U.
  Vec straighten(const Vec& x, const Vec& a) const;
  /// Sparse form of e^P e_Q, as (index in D, coefficient) pairs.
  const std::vector<std::pair<int, Scalar>>& straighten_basis(int p, int q) const {
    return straighten_[static_cast<std::size_t>(p * base_dim() + q)];
  }

 private:
  DrinfeldDouble() = default;

  HopfPtr f_;
  HopfPtr u_;
  HopfPtr d_;
  std::vector<std::vector<std::pair<int, Scalar>>> straighten_;
};

using DoublePtr = std::shared_ptr<const DrinfeldDouble>;

struct CanonicalR {
  Tensor2 r;      // sum_A (e_A (x) 1) (x) (1 (x) e^A)
  Tensor2 r_inv;  // sum_A (S(e_A) (x) 1) (x) (1 (x) e^A)
  int terms = 0;  // number of summands of R
};

CanonicalR canonical_r(const DrinfeldDouble& d);

/// sigma(Delta x) R = R Delta x for every basis element x of D, plus
/// R R^{-1} = R^{-1} R = 1 (x) 1.
Report verify_quasitriangular(const DrinfeldDouble& d);

/// Embeddings of F and U are Hopf maps; the cross relation in the second
/// (a X) form and the index form of the double's defining relation agree
/// with the materialized product.
Report verify_double_relations(const DrinfeldDouble& d);

}  // namespace hopfdouble
