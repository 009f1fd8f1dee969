#include "hopfdouble/class_calculus.hpp"

namespace hopfdouble {

ClassCalculus class_calculus(const DoublePtr& d, const FiniteGroup& g, const ConjugacyClass& c) {
  DoubleRepresentation rho = class_representation(d, g, c);
  const int n = rho.n;
  const int dim = d->base_dim();
  const auto un = static_cast<std::size_t>(n);

  ChiTuple chi(un, zero_vec(static_cast<std::size_t>(dim)));
  for (std::size_t i = 0; i < un; ++i) {
    chi[i][static_cast<std::size_t>(c.members[i])] += Scalar(1);
    chi[i][static_cast<std::size_t>(g.identity)] -= Scalar(1);
  }

  Report report;
  RowEchelon solutions(un * static_cast<std::size_t>(dim));
  for (const Vec& v : solve_chi_space(rho)) solutions.insert(v);
  bool consistent = solutions.contains(flatten(chi));
  report.add("chi_in_solver_space", consistent, consistent ? "" : "chi_g = g - e is not a solution");
  if (!consistent) throw VerificationFailure(report);

  ClassCalculus out;
  out.conjugacy_class = c;
  out.calculus = make_calculus(rho, chi);
  out.calculus.degenerate = c.members.size() == 1 && c.members[0] == g.identity;

  CoefficientBimodule over_f = inv_gamma_bimodule(rho, Base::F);
  out.psi = zero_cochain(over_f, 1);
  for (int a = 0; a < dim; ++a)
    for (int i = 0; i < n; ++i) {
      Scalar eps = a == g.identity ? Scalar(1) : Scalar(0);
      Scalar at_g = a == c.members[static_cast<std::size_t>(i)] ? Scalar(1) : Scalar(0);
      out.psi.values[static_cast<std::size_t>(a * n + i)] = eps - at_g;
    }
  out.sum_omega = zero_cochain(over_f, 0);
  for (auto& v : out.sum_omega.values) v = Scalar(1);

  Cochain dpsi = coboundary(over_f, out.psi);
  report.add("psi_cocycle", is_zero(dpsi.values));
  report.add("psi_is_coboundary_of_sum_omega", coboundary(over_f, out.sum_omega) == out.psi);

  Cochain restricted = restrict_to_F(d, calculus_to_cocycle(out.calculus));
  Vec neg = Scalar(-1) * restricted.values;
  report.add("psi_is_minus_chi_cocycle", neg == out.psi.values);
  out.report = std::move(report);
  return out;
}

}  // namespace hopfdouble
