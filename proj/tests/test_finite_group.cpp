#include <algorithm>

#include <doctest.h>

#include "fixtures.hpp"
#include "hopfdouble/class_calculus.hpp"

using namespace hopfdouble;

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& c : conjugacy_classes(g)) out.push_back(c.members.size());
  return out;
}

}  // namespace

TEST_CASE("Cayley tables are validated") {
  FiniteGroup z2 = group_from_table({{0, 1}, {1, 0}});
  CHECK(z2.order == 2);
  CHECK(z2.identity == 0);
  CHECK(z2.inv(1) == 1);
  // x y = y for all x, y with |G| = 2 is associative but has no two-sided identity
  CHECK_THROWS_WITH_AS(group_from_table({{0, 1}, {0, 1}}), "no identity element", Error);
  // commutative, unital, but (1*1)*2 != 1*(1*2)
  std::vector<std::vector<int>> broken = {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
  CHECK_THROWS_WITH_AS(group_from_table(broken), doctest::Contains("associativity fails at"), Error);
  CHECK_THROWS_AS(group_from_table({{0, 1}, {1}}), DimensionMismatch);
  CHECK_THROWS_AS(group_from_table({{0, 2}, {1, 0}}), Error);
  CHECK_THROWS_AS(group_from_table(cyclic_group(5).table, {}, 4), Error);
}

TEST_CASE("permutation generators are closed to the full group") {
  FiniteGroup s3 = fixtures::s3();
  CHECK(s3.order == 6);
  CHECK(s3.labels[sz(s3.identity)] == "e");
  CHECK(s3.identity == 0);
  for (int a = 0; a < 6; ++a) CHECK(s3.mul(a, s3.inv(a)) == s3.identity);
  CHECK(group_from_generators("(1234)").order == 4);
  CHECK(group_from_generators("(12),(34)").order == 4);
  CHECK(group_from_generators("(1234),(12)").order == 24);
  CHECK(group_from_generators("(1 10)(2 3)").order == 2);
  CHECK_THROWS_AS(group_from_generators("(12345),(12)"), Error);
  CHECK(group_from_generators("(12345),(12)", 120).order == 120);
  CHECK_THROWS_AS(group_from_generators("(12"), Error);
  CHECK_THROWS_AS(group_from_generators("(1a)"), Error);
}

TEST_CASE("composition is right to left") {
  FiniteGroup g = group_from_generators("(12),(23)");
  auto find = [&](const std::string& l) {
    for (int a = 0; a < g.order; ++a)
      if (g.labels[sz(a)] == l) return a;
    return -1;
  };
  // (12)(23) applies (23) first: 1 -> 2, 2 -> 3, 3 -> 1
  CHECK(g.mul(find("(12)"), find("(23)")) == find("(123)"));
  CHECK(g.mul(find("(23)"), find("(12)")) == find("(132)"));
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(cyclic_group(2)) == std::vector<std::size_t>{1, 1});
  CHECK(class_sizes(cyclic_group(3)) == std::vector<std::size_t>{1, 1, 1});
  CHECK(class_sizes(fixtures::s3()) == std::vector<std::size_t>{1, 3, 2});
  FiniteGroup s4 = group_from_generators("(1234),(12)");
  std::size_t total = 0;
  for (const auto& c : conjugacy_classes(s4)) total += c.members.size();
  CHECK(total == 24);
  std::vector<std::size_t> sizes = class_sizes(s4);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("trivial and cyclic function algebras") {
  HopfPtr one = function_hopf(cyclic_group(1));
  CHECK(one->dim() == 1);
  CHECK(one->axiom_report().passed());
  HopfPtr kg = group_algebra(fixtures::s3());
  CHECK(kg->axiom_report().passed());
  CHECK(kg->is_cocommutative());
  CHECK_FALSE(kg->is_commutative());
}

TEST_CASE("class representations") {
  FiniteGroup z2 = cyclic_group(2);
  DoublePtr d = DrinfeldDouble::build(function_hopf(z2));
  DoubleRepresentation rho = class_representation(d, z2, conjugacy_classes(z2)[1]);
  CHECK(rho.n == 1);
  CHECK(rho.rhoF[0](0, 0) == Scalar(0));
  CHECK(rho.rhoF[1](0, 0) == Scalar(1));
  CHECK(rho.rhoU[1](0, 0) == Scalar(1));
  DoubleRepresentation triv = class_representation(d, z2, conjugacy_classes(z2)[0]);
  CHECK(triv.rhoF[0](0, 0) == Scalar(1));
  CHECK(verify_double_rep(triv).passed());
  DoublePtr wrong = DrinfeldDouble::build(function_hopf(cyclic_group(3)));
  CHECK_THROWS_AS(class_representation(wrong, z2, conjugacy_classes(z2)[1]), DimensionMismatch);
}

TEST_CASE("class calculi of small groups") {
  std::vector<FiniteGroup> groups = {cyclic_group(2), cyclic_group(3), cyclic_group(4), fixtures::s3()};
  for (const auto& g : groups) {
    CAPTURE(g.order);
    DoublePtr d = DrinfeldDouble::build(function_hopf(g));
    int calculi = 0, nontrivial = 0;
    for (const auto& c : conjugacy_classes(g)) {
      ClassCalculus cc = class_calculus(d, g, c);
      CHECK(cc.report.passed());
      CHECK(cc.report.find("psi_is_coboundary_of_sum_omega") != nullptr);
      bool trivial = c.members.size() == 1 && c.members[0] == g.identity;
      CHECK(cc.calculus.degenerate == trivial);
      if (!trivial) ++nontrivial;
      // [psi(delta_x)]_g = eps(delta_x) - delta_x(g)
      const int n = static_cast<int>(c.members.size());
      for (int x = 0; x < g.order; ++x)
        for (int i = 0; i < n; ++i) {
          Scalar expected = Scalar(x == g.identity ? 1 : 0) - Scalar(x == c.members[sz(i)] ? 1 : 0);
          CHECK(cc.psi.values[sz(x * n + i)] == expected);
        }
      DoubleRepresentation rho = class_representation(d, g, c);
      ChiSelection sel = select_independent_chi(solve_chi_space(rho), rho.n, g.order);
      if (sel.status == SelectionStatus::found) ++calculi;
      CHECK(check_qybe(lambda_from_rep(rho), rho.n));
      if (!trivial) CHECK(verify_leibniz(cc.calculus).passed());
    }
    CHECK(calculi == nontrivial);
  }
}

TEST_CASE("Z2 class calculus values") {
  FiniteGroup z2 = cyclic_group(2);
  DoublePtr d = DrinfeldDouble::build(function_hopf(z2));
  ClassCalculus cc = class_calculus(d, z2, conjugacy_classes(z2)[1]);
  CHECK(cc.calculus.chi[0] == Vec{-1, 1});
  CHECK(cc.psi.values == Vec{1, -1});
  CHECK(cc.sum_omega.values == Vec{1});
}
