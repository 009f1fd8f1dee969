#include <doctest.h>

#include "fixtures.hpp"

using namespace hopfdouble;

namespace {

std::vector<HopfPtr> fixture_algebras() {
  FiniteGroup s3 = fixtures::s3();
  return {function_hopf(cyclic_group(2)), function_hopf(cyclic_group(3)), function_hopf(cyclic_group(4)),
          function_hopf(s3), dual_hopf(function_hopf(s3)), fixtures::sweedler()};
}

}  // namespace

TEST_CASE("fixture algebras satisfy every axiom") {
  for (const auto& h : fixture_algebras()) {
    Report r = verify_hopf_axioms(h->data());
    CHECK(r.passed());
    CHECK(r.checks.size() == 9);
  }
}

TEST_CASE("single-entry corruptions are rejected with a witness") {
  HopfData base = function_hopf(fixtures::s3())->data();
  std::vector<std::pair<const char*, HopfData>> cases;
  {
    HopfData h = base;
    h.mult = fixtures::with_entry_scaled(h.mult, 3, 2);
    cases.push_back({"mult", h});
  }
  {
    HopfData h = base;
    h.comult = fixtures::with_entry_scaled(h.comult, 5, -1);
    cases.push_back({"comult", h});
  }
  {
    HopfData h = base;
    h.counit[2] = 1;
    cases.push_back({"counit", h});
  }
  {
    HopfData h = base;
    h.antipode(3, 3) = 1;
    cases.push_back({"antipode", h});
  }
  {
    HopfData h = base;
    h.unit[4] = 2;
    cases.push_back({"unit", h});
  }
  for (auto& [name, data] : cases) {
    CAPTURE(name);
    Report r = verify_hopf_axioms(data);
    REQUIRE_FALSE(r.passed());
    CHECK_FALSE(r.first_failure()->witness.empty());
    CHECK_THROWS_AS(HopfAlgebra::create(data), AxiomFailure);
  }
}

TEST_CASE("shape errors are reported as dimension mismatches") {
  HopfData h = fixtures::fz2_data();
  h.counit = {1};
  CHECK_THROWS_AS(verify_hopf_axioms(h), DimensionMismatch);
}

TEST_CASE("function algebra of Z2 equals the hand-written fixture") {
  HopfData a = function_hopf(cyclic_group(2))->data();
  HopfData b = fixtures::fz2_data();
  CHECK(a.mult == b.mult);
  CHECK(a.comult == b.comult);
  CHECK(a.counit == b.counit);
  CHECK(a.unit == b.unit);
  CHECK(a.antipode == b.antipode);
}

TEST_CASE("dual of F(G) is the group algebra with opposite coproduct") {
  FiniteGroup g = fixtures::s3();
  HopfData u = dual_hopf(function_hopf(g))->data();
  HopfData k = group_algebra(g)->data();
  // products agree exactly; kG is cocommutative so the opposite coproduct changes nothing
  CHECK(u.mult == k.mult);
  CHECK(u.comult == k.comult);
  CHECK(u.counit == k.counit);
  CHECK(u.unit == k.unit);
  CHECK(u.antipode == k.antipode);
}

TEST_CASE("pairing and star actions on F(S3)") {
  FiniteGroup g = fixtures::s3();
  HopfPtr f = function_hopf(g);
  HopfPtr u = dual_hopf(f);
  for (int x = 0; x < g.order; ++x)
    for (int a = 0; a < g.order; ++a)
      CHECK(pair(AlgebraElement::basis(u, x), AlgebraElement::basis(f, a)) == Scalar(x == a ? 1 : 0));
  // <X, ab> = <X_(1), a><X_(2), b> with the plain coproduct
  for (int x = 0; x < g.order; ++x) {
    Tensor2 cop = plain_coproduct(*u, u->basis(x));
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b) {
        Scalar lhs = pair(AlgebraElement::basis(u, x), AlgebraElement::basis(f, a) * AlgebraElement::basis(f, b));
        Scalar rhs;
        for (const auto& [k, v] : cop)
          if (k.first == a && k.second == b) rhs += v;
        CHECK(lhs == rhs);
      }
  }
  // (h * delta_x)(k) = delta_x(k h): right translation
  AlgebraElement h = AlgebraElement::basis(u, 1);
  for (int x = 0; x < g.order; ++x) {
    AlgebraElement r = star_left(h, AlgebraElement::basis(f, x));
    for (int k = 0; k < g.order; ++k) CHECK(r.coords[static_cast<std::size_t>(k)] == Scalar(g.mul(k, 1) == x ? 1 : 0));
  }
}

TEST_CASE("Sweedler algebra is neither commutative nor cocommutative") {
  HopfPtr h = fixtures::sweedler();
  CHECK_FALSE(h->is_commutative());
  CHECK_FALSE(h->is_cocommutative());
  CHECK(h->antipode(h->antipode(h->basis(2))) == Scalar(-1) * h->basis(2));
  CHECK(h->antipode_inv(h->antipode(h->basis(3))) == h->basis(3));
}

TEST_CASE("elements of different algebras do not mix") {
  HopfPtr a = function_hopf(cyclic_group(2));
  HopfPtr b = function_hopf(cyclic_group(2));
  CHECK_THROWS_AS(AlgebraElement::one(a) + AlgebraElement::one(b), ParentMismatch);
}

TEST_CASE("adjoint action and Ad on a commutative algebra") {
  FiniteGroup g = fixtures::s3();
  HopfPtr f = function_hopf(g);
  HopfPtr u = dual_hopf(f);
  // In kG: ad_h(k) = h^{-1} k h; on F(G): Ad_h(delta_x) = delta_{h x h^{-1}}
  for (int h = 0; h < g.order; ++h)
    for (int k = 0; k < g.order; ++k) {
      AlgebraElement r = adjoint_action(AlgebraElement::basis(u, h), AlgebraElement::basis(u, k));
      CHECK(r == AlgebraElement::basis(u, g.mul(g.mul(g.inv(h), k), h)));
      AlgebraElement ad = big_ad(AlgebraElement::basis(u, h), AlgebraElement::basis(f, k));
      CHECK(ad == AlgebraElement::basis(f, g.conj(h, k)));
    }
}
