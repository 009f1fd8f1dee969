#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hopfdouble {

using Mat5 = Eigen::Matrix<double, 5, 5>;

/// The five-dimensional representation of the double of E_q(2) built from
/// the four-dimensional calculus, at deformation parameter z.
struct Eq2Rep {
  double z = 0;
  double kappa = 0;  // e^{z/4} - e^{-3z/4}
  Mat5 J, b_plus, b_minus, pi, pi_plus, pi_minus;
  Mat5 exp_zJ;      // e^{zJ}
  Mat5 exp_minus_zJ;
  Mat5 exp_minus_pi;  // closed form
  std::array<Mat5, 4> chi;
};

/// Throws Error for z = 0 (kappa vanishes) or non-finite z.
Eq2Rep eq2_matrices(double z);

struct Eq2Check {
  std::string name;
  double residual = 0;  // max-norm
  bool passed = false;
};

struct Eq2Report {
  double z = 0;
  double tol = 0;
  std::vector<Eq2Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  double max_residual() const {
    double m = 0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
  }
};

/// The fifteen commutation relations of the double as matrix identities.
Eq2Report eq2_verify_relations(double z, double tol);
/// Block structure of the extended representation: zero row 0 on J, b and
/// the chi, pairings on row 0 of pi, pi_+, pi_-, and the closed-form
/// exponentials against a series evaluation.
Eq2Report eq2_verify_block(double z, double tol);

/// The printed f_ij and R_ij matrices, as strings (reference data).
const std::array<std::array<const char*, 4>, 4>& eq2_reference_f();
const std::array<std::array<const char*, 4>, 4>& eq2_reference_R();

}  // namespace hopfdouble
