#pragma once

#include <optional>
#include <vector>

#include "hopfdouble/calculus.hpp"

namespace hopfdouble {

/// A bimodule over a finite-dimensional algebra, given by the matrices of
/// the left and right actions of each basis element on an m-dimensional
/// carrier: alpha . v = left[alpha] v, v . alpha = right[alpha] v.
struct CoefficientBimodule {
  HopfPtr algebra;
  int m = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  /// Set for invGamma coefficients; used by the U-action on cochains.
  std::optional<DoubleRepresentation> rep;
};

enum class Base { D, F };

/// invGamma over D or over F: alpha . v = eps(alpha) v, v . alpha = rho(alpha)^t v.
CoefficientBimodule inv_gamma_bimodule(const DoubleRepresentation& rho, Base base);
/// ker eps in F as a D-bimodule: alpha . h = eps(alpha) h and
/// h . (a X) = Ad_{S~X}(h a). The carrier uses the coordinates of F.
CoefficientBimodule ker_epsilon_bimodule(const DoublePtr& d);

/// Bimodule axioms on all basis pairs, restricted to the given carrier
/// vectors (all unit vectors when empty).
Report verify_bimodule_axioms(const CoefficientBimodule& b, const std::vector<Vec>& carrier = {});

/// A k-cochain: values[t * m + r] is component r of phi on the basis tuple
/// with mixed-radix index t (first argument most significant).
struct Cochain {
  int degree = 0;
  Vec values;
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain zero_cochain(const CoefficientBimodule& b, int degree);
/// Value on a tuple of basis indices.
Vec cochain_at(const CoefficientBimodule& b, const Cochain& c, const std::vector<int>& args);
/// Value of a 1-cochain on an arbitrary element.
Vec evaluate(const CoefficientBimodule& b, const Cochain& c, const Vec& alpha);

Cochain coboundary(const CoefficientBimodule& b, const Cochain& phi);

struct CohomologyReport {
  int degree = 0;
  std::vector<Vec> cocycles;      // basis of Z^k
  std::vector<Vec> coboundaries;  // basis of B^k
  std::vector<Vec> classes;       // cocycles completing B^k to Z^k
  Report report;                  // B in Z, dim H = dim Z - dim B

  std::size_t dim_Z() const { return cocycles.size(); }
  std::size_t dim_B() const { return coboundaries.size(); }
  std::size_t dim_H() const { return classes.size(); }
};

/// Z^k, B^k and H^k for k in {0, 1}.
CohomologyReport cohomology_spaces(const CoefficientBimodule& b, int k);

/// Cochain over D with phi(a X) = rho(X)^t chi(a), chi(a)_i = <chi_i, a>.
/// Throws VerificationFailure unless delta phi = 0 and phi vanishes on U.
Cochain calculus_to_cocycle(const FirstOrderCalculus& c);
/// chi_i read off phi on F; requires delta phi = 0 and phi|_U = 0.
FirstOrderCalculus cocycle_to_calculus(const DoubleRepresentation& rho, const Cochain& phi);

/// Restriction to F of a cochain over D (degree 1).
Cochain restrict_to_F(const DoublePtr& d, const Cochain& phi);
/// phi = psi o phi^ for a 1-cochain psi over F.
Cochain extend_by_universal(const DoublePtr& d, const Cochain& psi, int m);

/// (psi . X)(a_1..a_k) = sum rho(X_(k+1))^t psi(Ad_{X_(k)} a_1, .., Ad_{X_(1)} a_k),
/// with the coproduct of U dual to the product of F. b must be invGamma over F.
Cochain bullet_action(const CoefficientBimodule& b, const Cochain& psi, const Vec& x);

/// Basis of the cochains in span(space) with psi . X = eps(X) psi for all X.
std::vector<Vec> invariant_subspace(const CoefficientBimodule& b, const std::vector<Vec>& space, int degree);
/// Basis of the invariant 1-cocycles over F.
std::vector<Vec> invariant_cocycles(const CoefficientBimodule& b);
/// Basis of {phi in Z^1(D) : phi|_U = 0}.
std::vector<Vec> calculus_cocycles(const CoefficientBimodule& over_d);

/// Both directions of the correspondence between invariant 1-cocycles over
/// F and 1-cocycles over D vanishing on U, and delta of invariant 0-cochains.
Report verify_cocycle_correspondence(const DoubleRepresentation& rho);

struct InnerDifferential {
  std::vector<GammaElement> d;  // d(e_A) for every basis element
  Report report;
};

/// da = sum a_(1) (delta gamma)(a_(2)); checks invariance of gamma, that
/// gamma is left and right coinvariant in Gamma, and da = a gamma - gamma a.
/// Throws Error when gamma is not invariant.
InnerDifferential inner_differential(const DoubleRepresentation& rho, const Vec& gamma);

/// phi^(a X) = Ad_{S~X}(a) - eps(X) eps(a) 1 with values in ker eps.
Cochain universal_cocycle(const DoublePtr& d);
/// delta phi^ = 0, phi^ vanishes on U, phi^(a) = a - eps(a) 1 on F.
Report verify_universal_cocycle(const DoublePtr& d);
/// r o D = D' on every basis element, D' a = sum a_(1) (x) phi^(a_(2)), and
/// r maps ker m into F (x) ker eps.
Report universal_differential_check(const DoublePtr& d);

/// ker eps with the right D-action above, as a representation of dimension
/// dim F - 1 on the basis returned by the counit kernel.
DoubleRepresentation universal_representation(const DoublePtr& d);

}  // namespace hopfdouble
