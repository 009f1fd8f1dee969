#pragma once

#include "hopfdouble/finite_group.hpp"
#include "hopfdouble/hochschild.hpp"

namespace hopfdouble {

/// The calculus of a conjugacy class C, with chi_g = g - e in kG, together
/// with the 1-cocycle psi over F(G), [psi(a)]_g = eps(a) - a(g).
struct ClassCalculus {
  ConjugacyClass conjugacy_class;
  FirstOrderCalculus calculus;
  Cochain psi;          // 1-cochain in invGamma over F
  Cochain sum_omega;    // the 0-cochain sum_{g in C} omega_g
  Report report;
};

/// Builds the class calculus and checks: chi lies in the solver's solution
/// space, delta psi = 0, psi = delta(sum omega_g), and psi is minus the
/// restriction of the chi-cocycle. Throws VerificationFailure when chi is
/// not in the solution space. For C = {e} the calculus is flagged degenerate.
ClassCalculus class_calculus(const DoublePtr& d, const FiniteGroup& g, const ConjugacyClass& c);

}  // namespace hopfdouble
