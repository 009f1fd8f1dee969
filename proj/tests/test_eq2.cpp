#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "hopfdouble/eq2.hpp"
#include "hopfdouble/scalar.hpp"

using namespace hopfdouble;

namespace {

std::vector<double> sample_z() {
  std::vector<double> zs = {0.3, 0.7, 1.1};
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int i = 0; i < 5; ++i) zs.push_back(u(rng));
  zs.push_back(-0.8);
  return zs;
}

}  // namespace

TEST_CASE("all fifteen relations hold at sampled z") {
  for (double z : sample_z()) {
    CAPTURE(z);
    Eq2Report r = eq2_verify_relations(z, 1e-10);
    CHECK(r.checks.size() == 15);
    CHECK(r.passed());
    CHECK(r.max_residual() < 1e-10);
  }
}

TEST_CASE("block structure of the extended representation") {
  for (double z : sample_z()) {
    CAPTURE(z);
    Eq2Report r = eq2_verify_block(z, 1e-10);
    CHECK(r.passed());
  }
}

TEST_CASE("generator matrices") {
  Eq2Rep r = eq2_matrices(0.7);
  CHECK(r.J(2, 2) == -1);
  CHECK(r.J(3, 3) == 1);
  CHECK(r.J.cwiseAbs().sum() == 2);
  CHECK(r.pi_plus(0, 3) == doctest::Approx(std::exp(0.35)).epsilon(1e-14));
  CHECK(r.kappa == doctest::Approx(2 * std::exp(-0.175) * std::sinh(0.35)).epsilon(1e-14));
  CHECK(r.pi(0, 4) == doctest::Approx(-0.7 / r.kappa).epsilon(1e-14));
  // structurally exact relations
  Mat5 jpi = r.J * r.pi - r.pi * r.J;
  CHECK(jpi.cwiseAbs().maxCoeff() == 0);
  Mat5 jb = r.J * r.b_plus - r.b_plus * r.J - r.b_plus;
  CHECK(jb.cwiseAbs().maxCoeff() == 0);
  // chi_1 = -kappa b- b+ has zero row and column 0
  CHECK(r.chi[0].row(0).cwiseAbs().maxCoeff() == 0);
  CHECK(r.chi[0].col(0).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("residuals detect a perturbed generator") {
  // a wrong sign on the right side is far outside tolerance; a zero tolerance is never met
  Eq2Rep r = eq2_matrices(0.7);
  Mat5 wrong = (r.b_minus * r.pi - r.pi * r.b_minus) - 0.7 * r.b_minus;
  CHECK(wrong.cwiseAbs().maxCoeff() > 1e-3);
  Eq2Report tight = eq2_verify_relations(0.7, 0.0);
  CHECK_FALSE(tight.passed());
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(eq2_matrices(0.0), Error);
  CHECK_THROWS_AS(eq2_matrices(std::numeric_limits<double>::infinity()), Error);
  CHECK_THROWS_AS(eq2_matrices(std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST_CASE("reference matrices are lower triangular") {
  const auto& f = eq2_reference_f();
  const auto& R = eq2_reference_R();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      CHECK(std::string(f[i][j]) == "0");
      CHECK(std::string(R[i][j]) == "0");
    }
  CHECK(std::string(f[0][0]) == "e^{zJ}");
  CHECK(std::string(R[3][3]) == "1");
}
