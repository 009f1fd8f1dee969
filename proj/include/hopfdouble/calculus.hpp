#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hopfdouble/bicovariant.hpp"
#include "hopfdouble/linalg.hpp"

namespace hopfdouble {

/// A tuple (chi_1..chi_n) of elements of U is stored flat: entry i*d + A is
/// <chi_i, e_A>.
using ChiTuple = std::vector<Vec>;

Vec flatten(const ChiTuple& chi);
ChiTuple unflatten(const Vec& flat, int n, int d);

/// Basis of the solutions of
///   <chi_i, ab> = <chi_j, a><f_ji, b> + eps(a)<chi_i, b>,  <chi_i, 1> = 0,
///   ad_X chi_i = <X, R_ik> chi_k  for every basis X of U,
/// as flat vectors.
std::vector<Vec> solve_chi_space(const DoubleRepresentation& rho);

enum class SelectionStatus { found, none, search_exhausted };

struct ChiSelection {
  SelectionStatus status = SelectionStatus::none;
  ChiTuple chi;  // set when found
};

struct SelectionOptions {
  int coefficient_bound = 2;
  int random_draws = 64;
  std::uint64_t seed = 0x5eed;
};

/// Looks for an element of span(space) whose n components are linearly
/// independent. Candidates are tried in a fixed order: single basis vectors,
/// pairs with coefficients in [-bound, bound], then seeded random small
/// integer combinations; the first hit is returned. "none" is reported only
/// when the components of all basis vectors together span fewer than n
/// dimensions.
ChiSelection select_independent_chi(const std::vector<Vec>& space, int n, int d, const SelectionOptions& options = {});

/// The n+1 dimensional block representation with row 0 of rho(e_A) equal to
/// (eps(e_A), <chi_i, e_A>) and rho(e^A) = diag(eps(e^A), rho(e^A)). Throws
/// VerificationFailure naming the failing product when it is not a
/// representation of the double.
DoubleRepresentation extend_representation(const DoubleRepresentation& rho, const ChiTuple& chi);

/// Delta_C^{AB} m_{BD}^E <chi_i, e_A> rho(e^D)_ij = Delta_C^{EA} <chi_j, e_A>.
Report check_quasitriangular_chi(const DoubleRepresentation& rho, const ChiTuple& chi);

/// Inverse of extend_representation: the inner representation and chi,
/// if the input has the block pattern.
std::optional<std::pair<DoubleRepresentation, ChiTuple>> chi_from_extended(const DoubleRepresentation& ext);

struct FirstOrderCalculus {
  BicovariantBimodule bimodule;
  DoubleRepresentation rep;
  ChiTuple chi;
  DoubleRepresentation extended;
  /// chi components are linearly dependent (for example all zero); the
  /// differential is still defined but the forms are not spanned by dF.
  bool degenerate = false;
};

/// Coproduct, counit and adjoint conditions on chi, checked against the
/// pairing on all basis elements.
Report verify_chi(const DoubleRepresentation& rho, const ChiTuple& chi);

/// Builds and verifies the calculus; throws VerificationFailure when chi
/// fails verify_chi or the extension is not a representation.
FirstOrderCalculus make_calculus(const DoubleRepresentation& rho, const ChiTuple& chi);

/// da = (chi_i * a) omega_i.
GammaElement differential(const Vec& a, const FirstOrderCalculus& c);
/// d1 = 0 and d(ab) = a db + (da) b on all basis pairs.
Report verify_leibniz(const FirstOrderCalculus& c);

struct IdealJ {
  std::vector<Vec> basis;
  Report invariance;
};

/// J = ker eps intersected with the kernels of the chi_i, with the check that
/// ad*(j) lies in J (x) F for every basis element j.
IdealJ ideal_J(const FirstOrderCalculus& c);

/// a * chi_i = (chi_j * a) R_ij for all i.
bool left_right_relation_check(const FirstOrderCalculus& c, const Vec& a);

struct ExtendedLambda {
  Matrix lambda;  // (n+1)^2 x (n+1)^2, index 0 is the added row
  Report report;
};

/// Lambda of the extended representation, its block pattern and QYBE.
ExtendedLambda extended_lambda(const FirstOrderCalculus& c);

}  // namespace hopfdouble
