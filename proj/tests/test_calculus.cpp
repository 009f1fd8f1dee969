#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "hopfdouble/calculus.hpp"
#include "hopfdouble/hochschild.hpp"

using namespace hopfdouble;

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return rank(a) == rank(b) && rank(all) == rank(a);
}

DoubleRepresentation class_rep(const FiniteGroup& g, int k) {
  DoublePtr d = DrinfeldDouble::build(function_hopf(g));
  return class_representation(d, g, conjugacy_classes(g)[sz(k)]);
}

ChiTuple g_minus_e(const FiniteGroup& g, const ConjugacyClass& c) {
  ChiTuple chi(c.members.size(), Vec(sz(g.order)));
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    chi[i][sz(c.members[i])] += 1;
    chi[i][sz(g.identity)] -= 1;
  }
  return chi;
}

}  // namespace

TEST_CASE("solver agrees with the brute-force assembly") {
  FiniteGroup s3 = fixtures::s3();
  std::vector<DoubleRepresentation> reps = {class_rep(s3, 0), class_rep(s3, 1), class_rep(s3, 2),
                                            class_rep(cyclic_group(3), 1), class_rep(cyclic_group(4), 2),
                                            universal_representation(DrinfeldDouble::build(fixtures::sweedler()))};
  for (const auto& rho : reps) {
    CAPTURE(rho.n);
    std::vector<Vec> solver = solve_chi_space(rho);
    std::vector<Vec> oracle = oracles::brute_force_chi_space(rho);
    CHECK(solver.size() == oracle.size());
    CHECK(same_span(solver, oracle));
  }
}

TEST_CASE("S3 transposition class: chi_g = g - e and the extended representation") {
  FiniteGroup g = fixtures::s3();
  ConjugacyClass c = conjugacy_classes(g)[1];
  DoubleRepresentation rho = class_rep(g, 1);
  ChiTuple chi = g_minus_e(g, c);
  std::vector<Vec> space = solve_chi_space(rho);
  CHECK(space.size() == 1);
  RowEchelon e(sz(3 * g.order));
  for (const auto& v : space) e.insert(v);
  CHECK(e.contains(flatten(chi)));
  CHECK(verify_chi(rho, chi).passed());
  CHECK(check_quasitriangular_chi(rho, chi).passed());

  DoubleRepresentation ext = extend_representation(rho, chi);
  CHECK(ext.n == 4);
  CHECK(verify_double_rep(ext).passed());
  auto back = chi_from_extended(ext);
  REQUIRE(back.has_value());
  CHECK(back->second == chi);
  CHECK(back->first.rhoU == rho.rhoU);

  FirstOrderCalculus calc = make_calculus(rho, chi);
  CHECK_FALSE(calc.degenerate);
  Report leibniz = verify_leibniz(calc);
  CHECK(leibniz.passed());
  CHECK(leibniz.find("d1_zero") != nullptr);
  for (int a = 0; a < g.order; ++a) CHECK(left_right_relation_check(calc, rho.D->F()->basis(a)));
  ExtendedLambda el = extended_lambda(calc);
  CHECK(el.report.passed());
  CHECK(el.lambda.rows() == 16);
}

TEST_CASE("differential of delta functions") {
  FiniteGroup g = cyclic_group(2);
  DoubleRepresentation rho = class_rep(g, 1);
  FirstOrderCalculus calc = make_calculus(rho, g_minus_e(g, conjugacy_classes(g)[1]));
  // d delta_u = (chi * delta_u) omega = (delta_e - delta_u) omega for chi = u - e
  GammaElement d = differential(rho.D->F()->basis(1), calc);
  CHECK(d.coords.at(0) == Vec{1, -1});
}

TEST_CASE("dimension of the ideal J") {
  struct Row {
    FiniteGroup g;
    int k;
    std::size_t dim;
  };
  std::vector<Row> rows = {{cyclic_group(2), 1, 0}, {cyclic_group(3), 1, 1},
                           {fixtures::s3(), 1, 2}, {fixtures::s3(), 2, 3}};
  for (const auto& r : rows) {
    ConjugacyClass c = conjugacy_classes(r.g)[sz(r.k)];
    FirstOrderCalculus calc = make_calculus(class_rep(r.g, r.k), g_minus_e(r.g, c));
    IdealJ j = ideal_J(calc);
    CHECK(j.basis.size() == r.dim);
    CHECK(j.invariance.passed());
    // dim F = 1 + n + dim J for these calculi
    CHECK(1 + c.members.size() + j.basis.size() == sz(r.g.order));
  }
}

TEST_CASE("selection: trivial class has no calculus, nontrivial classes do") {
  FiniteGroup g = fixtures::s3();
  for (int k = 0; k < 3; ++k) {
    DoubleRepresentation rho = class_rep(g, k);
    ChiSelection sel = select_independent_chi(solve_chi_space(rho), rho.n, g.order);
    CHECK(sel.status == (k == 0 ? SelectionStatus::none : SelectionStatus::found));
    if (sel.status == SelectionStatus::found) CHECK(verify_chi(rho, sel.chi).passed());
  }
  // zero search budget on a space whose single vectors are dependent
  std::vector<Vec> space = {Vec{1, 0, 0, 0}, Vec{0, 0, 0, 1}};
  SelectionOptions none{0, 0, 1};
  ChiSelection s = select_independent_chi(space, 2, 2, none);
  CHECK(s.status == SelectionStatus::search_exhausted);
  CHECK(select_independent_chi(space, 2, 2).status == SelectionStatus::found);
}

TEST_CASE("wrong chi is rejected") {
  FiniteGroup g = fixtures::s3();
  DoubleRepresentation rho = class_rep(g, 1);
  ChiTuple chi = g_minus_e(g, conjugacy_classes(g)[1]);
  std::swap(chi[0], chi[1]);
  CHECK_FALSE(verify_chi(rho, chi).passed());
  CHECK_THROWS_AS(make_calculus(rho, chi), VerificationFailure);
  CHECK_THROWS_AS(extend_representation(rho, chi), VerificationFailure);
}

TEST_CASE("Sweedler algebra: counit-kernel calculus") {
  DoublePtr d = DrinfeldDouble::build(fixtures::sweedler());
  DoubleRepresentation rho = universal_representation(d);
  std::vector<Vec> space = solve_chi_space(rho);
  ChiSelection sel = select_independent_chi(space, rho.n, d->base_dim());
  REQUIRE(sel.status == SelectionStatus::found);
  FirstOrderCalculus calc = make_calculus(rho, sel.chi);
  CHECK(verify_leibniz(calc).passed());
  CHECK(check_quasitriangular_chi(rho, sel.chi).passed());
  CHECK(ideal_J(calc).basis.empty());
  CHECK(extended_lambda(calc).report.passed());
}

TEST_CASE("flatten and unflatten are inverse") {
  ChiTuple chi = {Vec{1, 2, 3}, Vec{4, 5, 6}};
  CHECK(flatten(chi) == Vec{1, 2, 3, 4, 5, 6});
  CHECK(unflatten(flatten(chi), 2, 3) == chi);
}
