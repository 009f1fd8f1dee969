#pragma once

#include <array>
#include <map>
#include <vector>

#include "hopfdouble/drinfeld_double.hpp"

namespace hopfdouble {

/// A representation of the double given by its restrictions to F and U:
/// rhoF[A] = rho(e_A (x) 1), rhoU[B] = rho(1 (x) e^B).
struct DoubleRepresentation {
  DoublePtr D;
  int n = 0;
  std::vector<Matrix> rhoF;
  std::vector<Matrix> rhoU;

  Matrix of_F(const Vec& a) const;
  Matrix of_U(const Vec& x) const;
  /// rho of an element of D in the product basis.
  Matrix of(const Vec& alpha) const;
};

/// rho(e_A) = epsilon(e_A) I_n, rho(e^B) = epsilon_U(e^B) I_n.
DoubleRepresentation trivial_representation(const DoublePtr& d, int n = 1);

/// Multiplicativity on every pair of basis elements of D and rho(1) = I.
Report verify_double_rep(const DoubleRepresentation& rho);

/// f_ij in U and R_ij in F, stored as coordinate vectors.
struct BicovariantBimodule {
  DoublePtr D;
  int n = 0;
  std::vector<std::vector<Vec>> f;
  std::vector<std::vector<Vec>> R;

  const Vec& f_at(int i, int j) const { return f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Vec& R_at(int i, int j) const { return R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

/// Corepresentation and counit conditions on f and R, and the compatibility
/// sum_i R_ij (a * f_ik) = sum_i (f_ji * a) R_ki for every basis a.
Report verify_bimodule(const BicovariantBimodule& b);

/// f_ij = rho(e_A)_ij e^A, R_ij = e_A rho(S~^{-1} e^A)_ji. Throws
/// VerificationFailure if the input or output fails its checks.
BicovariantBimodule rep_to_bimodule(const DoubleRepresentation& rho);
DoubleRepresentation bimodule_to_rep(const BicovariantBimodule& b);

/// Lambda with row i*n+j and column k*n+l holding <f_jl, R_ki>. Computed
/// from the pairing and from sigma(R^{-1}) in the representation; throws
/// Error if the two disagree.
Matrix lambda_matrix(const BicovariantBimodule& b);
/// Lambda from sigma(R^{-1}) = sum rho(S e_A)_jl rho(e^A)_ik.
Matrix lambda_from_rep(const DoubleRepresentation& rho);
/// L12 L13 L23 = L23 L13 L12 on the n^3 cube.
bool check_qybe(const Matrix& lambda, int n);

/// Element sum_i c_i omega_i of Gamma, c_i in F.
struct GammaElement {
  std::vector<Vec> coords;
  friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

GammaElement gamma_zero(const BicovariantBimodule& b);
/// a omega_i.
GammaElement gamma_basis(const BicovariantBimodule& b, int i, const Vec& a);
/// a . x.
GammaElement left_multiply(const BicovariantBimodule& b, const Vec& a, const GammaElement& x);
/// x . a, using omega_i a = (f_ij * a) omega_j.
GammaElement right_multiply(const BicovariantBimodule& b, const GammaElement& x, const Vec& a);
/// omega_i . a.
GammaElement module_right_action(int i, const Vec& a, const BicovariantBimodule& b);

/// Left coaction into F (x) Gamma, keyed (F index, coefficient index, form).
using LeftCoaction = std::map<std::array<int, 3>, Scalar>;
/// Right coaction into Gamma (x) F, keyed (coefficient index, form, F index).
using RightCoaction = std::map<std::array<int, 3>, Scalar>;

LeftCoaction left_coaction(const BicovariantBimodule& b, const GammaElement& x);
RightCoaction right_coaction(const BicovariantBimodule& b, const GammaElement& x);

/// Right module axiom, both coactions are bimodule maps and the two
/// coactions commute, checked on a omega_i for all basis a and all i.
Report verify_bicovariance(const BicovariantBimodule& b);

}  // namespace hopfdouble
