#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "hopfdouble/hochschild.hpp"

using namespace hopfdouble;

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Cochain random_cochain(const CoefficientBimodule& b, int degree, std::mt19937_64& rng) {
  Cochain c = zero_cochain(b, degree);
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  for (auto& v : c.values) v = Rational(num(rng), den(rng));
  return c;
}

DoubleRepresentation s3_transpositions() {
  FiniteGroup g = fixtures::s3();
  return class_representation(DrinfeldDouble::build(function_hopf(g)), g, conjugacy_classes(g)[1]);
}

}  // namespace

TEST_CASE("delta squared vanishes on random cochains") {
  std::mt19937_64 rng(3);
  DoubleRepresentation rho = s3_transpositions();
  CoefficientBimodule over_f = inv_gamma_bimodule(rho, Base::F);
  DoublePtr z2 = DrinfeldDouble::build(function_hopf(cyclic_group(2)));
  DoubleRepresentation rz2 = class_representation(z2, cyclic_group(2), conjugacy_classes(cyclic_group(2))[1]);
  std::vector<CoefficientBimodule> bimodules = {over_f, inv_gamma_bimodule(rz2, Base::D), ker_epsilon_bimodule(z2)};
  for (const auto& b : bimodules) {
    CHECK(verify_bimodule_axioms(b).passed());
    for (int k : {0, 1}) {
      for (int t = 0; t < 3; ++t) {
        Cochain c = random_cochain(b, k, rng);
        Cochain dd = coboundary(b, coboundary(b, c));
        CHECK(dd.degree == k + 2);
        CHECK(is_zero(dd.values));
      }
    }
  }
}

TEST_CASE("coboundary of a 1-cochain matches the textbook formula") {
  std::mt19937_64 rng(5);
  CoefficientBimodule b = inv_gamma_bimodule(s3_transpositions(), Base::F);
  const HopfAlgebra& f = *b.algebra;
  Cochain phi = random_cochain(b, 1, rng);
  Cochain dphi = coboundary(b, phi);
  for (int x = 0; x < f.dim(); ++x)
    for (int y = 0; y < f.dim(); ++y) {
      Vec expected = b.left[sz(x)].apply(cochain_at(b, phi, {y})) -
                     evaluate(b, phi, f.multiply(f.basis(x), f.basis(y))) +
                     b.right[sz(y)].apply(cochain_at(b, phi, {x}));
      CHECK(cochain_at(b, dphi, {x, y}) == expected);
    }
}

TEST_CASE("bullet action is a right action of U") {
  std::mt19937_64 rng(9);
  DoubleRepresentation rho = s3_transpositions();
  CoefficientBimodule b = inv_gamma_bimodule(rho, Base::F);
  const HopfAlgebra& u = *rho.D->U();
  for (int k : {0, 1}) {
    Cochain psi = random_cochain(b, k, rng);
    CHECK(bullet_action(b, psi, u.one()) == psi);
    for (int x = 0; x < u.dim(); ++x)
      for (int y = 0; y < u.dim(); ++y) {
        Cochain lhs = bullet_action(b, bullet_action(b, psi, u.basis(x)), u.basis(y));
        Cochain rhs = bullet_action(b, psi, u.multiply(u.basis(x), u.basis(y)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("cohomology with invGamma coefficients for the S3 transposition class") {
  DoubleRepresentation rho = s3_transpositions();
  CoefficientBimodule over_f = inv_gamma_bimodule(rho, Base::F);
  CohomologyReport h1 = cohomology_spaces(over_f, 1);
  CHECK(h1.report.passed());
  CHECK(h1.dim_Z() == 3);
  CHECK(h1.dim_B() == 3);
  CHECK(h1.dim_H() == 0);
  CohomologyReport h0 = cohomology_spaces(over_f, 0);
  CHECK(h0.dim_Z() == 0);
  CHECK(invariant_cocycles(over_f).size() == 1);
  CHECK(calculus_cocycles(inv_gamma_bimodule(rho, Base::D)).size() == 1);
  CHECK_THROWS_AS(cohomology_spaces(over_f, 2), Error);
}

TEST_CASE("invariant cocycles correspond to calculus cocycles") {
  FiniteGroup s3 = fixtures::s3();
  DoublePtr d = DrinfeldDouble::build(function_hopf(s3));
  for (const auto& c : conjugacy_classes(s3)) {
    Report r = verify_cocycle_correspondence(class_representation(d, s3, c));
    CHECK(r.passed());
    CHECK(r.find("dimensions_equal") != nullptr);
  }
  CHECK(verify_cocycle_correspondence(fixtures::standard_rep()).passed());
  CHECK(verify_cocycle_correspondence(universal_representation(DrinfeldDouble::build(fixtures::sweedler()))).passed());
}

TEST_CASE("rho|_F = eps gives no 1-coboundaries over F") {
  DoubleRepresentation rho = fixtures::standard_rep();
  REQUIRE(verify_double_rep(rho).passed());
  CoefficientBimodule over_f = inv_gamma_bimodule(rho, Base::F);
  CohomologyReport h1 = cohomology_spaces(over_f, 1);
  CHECK(h1.dim_B() == 0);
  CHECK(h1.report.passed());
}

TEST_CASE("calculus to cocycle and back") {
  DoubleRepresentation rho = s3_transpositions();
  std::vector<Vec> space = solve_chi_space(rho);
  ChiSelection sel = select_independent_chi(space, rho.n, rho.D->base_dim());
  REQUIRE(sel.status == SelectionStatus::found);
  FirstOrderCalculus calc = make_calculus(rho, sel.chi);
  Cochain phi = calculus_to_cocycle(calc);
  FirstOrderCalculus back = cocycle_to_calculus(rho, phi);
  CHECK(back.chi == calc.chi);
  Cochain psi = restrict_to_F(rho.D, phi);
  CHECK(extend_by_universal(rho.D, psi, rho.n) == phi);
}

TEST_CASE("inner differential of minus the sum of the forms") {
  DoubleRepresentation rho = s3_transpositions();
  FiniteGroup g = fixtures::s3();
  ConjugacyClass c = conjugacy_classes(g)[1];
  ChiTuple chi(3, Vec(6));
  for (std::size_t i = 0; i < 3; ++i) {
    chi[i][sz(c.members[i])] += 1;
    chi[i][sz(g.identity)] -= 1;
  }
  FirstOrderCalculus calc = make_calculus(rho, chi);
  InnerDifferential inner = inner_differential(rho, Vec{-1, -1, -1});
  CHECK(inner.report.passed());
  for (int a = 0; a < 6; ++a) CHECK(inner.d[sz(a)] == differential(rho.D->F()->basis(a), calc));
  CHECK_THROWS_AS(inner_differential(rho, Vec{1, 0, 0}), Error);
}

TEST_CASE("universal cocycle and universal differential") {
  std::vector<DoublePtr> doubles = {DrinfeldDouble::build(function_hopf(cyclic_group(2))),
                                    DrinfeldDouble::build(function_hopf(fixtures::s3())),
                                    DrinfeldDouble::build(fixtures::sweedler())};
  for (const auto& d : doubles) {
    Report u = verify_universal_cocycle(d);
    CHECK(u.passed());
    CHECK(u.find("vanishes_on_U") != nullptr);
    Report diff = universal_differential_check(d);
    CHECK(diff.passed());
    CHECK(diff.find("r_D_equals_D_prime") != nullptr);
    DoubleRepresentation rho = universal_representation(d);
    CHECK(rho.n == d->base_dim() - 1);
    CHECK(verify_double_rep(rho).passed());
  }
}
