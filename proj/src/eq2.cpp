#include "hopfdouble/eq2.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "hopfdouble/scalar.hpp"

namespace hopfdouble {
namespace {

Mat5 unit(int i, int j) {
  Mat5 m = Mat5::Zero();
  m(i, j) = 1;
  return m;
}

Mat5 diag(double a, double b, double c, double d, double e) {
  Mat5 m = Mat5::Zero();
  m.diagonal() << a, b, c, d, e;
  return m;
}

double max_norm(const Mat5& m) { return m.cwiseAbs().maxCoeff(); }

Mat5 comm(const Mat5& a, const Mat5& b) { return a * b - b * a; }

}  // namespace

Eq2Rep eq2_matrices(double z) {
  if (!std::isfinite(z)) throw Error("z must be finite");
  if (z == 0) throw Error("z = 0 makes kappa vanish");
  Eq2Rep r;
  r.z = z;
  r.kappa = std::exp(z / 4) - std::exp(-3 * z / 4);
  const double k = r.kappa;
  r.J = -unit(2, 2) + unit(3, 3);
  r.b_plus = std::exp(-3 * z / 4) * unit(1, 2) + std::exp(z / 4) * unit(3, 4);
  r.b_minus = std::exp(z / 4) * unit(1, 3) + std::exp(5 * z / 4) * unit(2, 4);
  r.pi = (-z / k) * unit(0, 4) + z * (unit(1, 1) - unit(4, 4));
  r.pi_plus = std::exp(z / 2) * unit(0, 3) + std::exp(z / 2) * k * (unit(2, 1) + unit(4, 3));
  r.pi_minus = -std::exp(-z / 2) * unit(0, 2) - std::exp(-z / 2) * k * (unit(3, 1) + unit(4, 2));
  r.exp_zJ = diag(1, 1, std::exp(-z), std::exp(z), 1);
  r.exp_minus_zJ = diag(1, 1, std::exp(z), std::exp(-z), 1);
  // -pi is diagonal plus z/kappa e04, and e04 only couples the 0 and 4 entries
  r.exp_minus_pi = diag(1, std::exp(-z), 1, 1, std::exp(z)) + ((std::exp(z) - 1) / k) * unit(0, 4);
  const Mat5 id = Mat5::Identity();
  r.chi[0] = -k * r.b_minus * r.b_plus;
  r.chi[1] = -std::exp(-z / 2) * r.b_minus;
  r.chi[2] = std::exp(z / 2) * r.exp_minus_zJ * r.b_plus;
  r.chi[3] = (r.exp_minus_zJ - id) / k;
  return r;
}

Eq2Report eq2_verify_relations(double z, double tol) {
  Eq2Rep r = eq2_matrices(z);
  const double ez = std::exp(z);
  Eq2Report rep{z, tol, {}};
  auto add = [&](const char* name, const Mat5& lhs, const Mat5& rhs) {
    double res = max_norm(lhs - rhs);
    rep.checks.push_back({name, res, res < tol});
  };
  const Mat5 zero = Mat5::Zero();
  add("[J,b+] = b+", comm(r.J, r.b_plus), r.b_plus);
  add("[J,b-] = -b-", comm(r.J, r.b_minus), -r.b_minus);
  add("[b+,b-] = 0", comm(r.b_plus, r.b_minus), zero);
  add("[pi,pi+] = -z pi+", comm(r.pi, r.pi_plus), -z * r.pi_plus);
  add("[pi,pi-] = -z pi-", comm(r.pi, r.pi_minus), -z * r.pi_minus);
  add("[pi-,pi+] = 0", comm(r.pi_minus, r.pi_plus), zero);
  add("[b-,pi-] = e^{-pi} - e^{-zJ}", comm(r.b_minus, r.pi_minus), r.exp_minus_pi - r.exp_minus_zJ);
  add("[b-,pi] = -z b-", comm(r.b_minus, r.pi), -z * r.b_minus);
  add("b- pi+ - e^z pi+ b- = 0", r.b_minus * r.pi_plus - ez * r.pi_plus * r.b_minus, zero);
  add("[J,pi-] = pi-", comm(r.J, r.pi_minus), r.pi_minus);
  add("[J,pi] = 0", comm(r.J, r.pi), zero);
  add("[J,pi+] = -pi+", comm(r.J, r.pi_plus), -r.pi_plus);
  add("[b+,pi+] = -e^{-pi} + e^{zJ}", comm(r.b_plus, r.pi_plus), -r.exp_minus_pi + r.exp_zJ);
  add("[b+,pi] = -z b+", comm(r.b_plus, r.pi), -z * r.b_plus);
  add("b+ pi- - e^z pi- b+ = 0", r.b_plus * r.pi_minus - ez * r.pi_minus * r.b_plus, zero);
  return rep;
}

Eq2Report eq2_verify_block(double z, double tol) {
  Eq2Rep r = eq2_matrices(z);
  Eq2Report rep{z, tol, {}};
  auto add = [&](std::string name, double res) { rep.checks.push_back({std::move(name), res, res < tol}); };

  const std::array<std::pair<const char*, const Mat5*>, 7> zero_row = {{
      {"J", &r.J}, {"b+", &r.b_plus}, {"b-", &r.b_minus},
      {"chi1", &r.chi[0]}, {"chi2", &r.chi[1]}, {"chi3", &r.chi[2]}, {"chi4", &r.chi[3]},
  }};
  for (const auto& [name, m] : zero_row) add(std::string("row0 ") + name + " = 0", m->row(0).cwiseAbs().maxCoeff());

  const std::array<std::pair<const char*, const Mat5*>, 10> zero_col = {{
      {"J", &r.J}, {"b+", &r.b_plus}, {"b-", &r.b_minus}, {"pi", &r.pi}, {"pi+", &r.pi_plus},
      {"pi-", &r.pi_minus}, {"chi1", &r.chi[0]}, {"chi2", &r.chi[1]}, {"chi3", &r.chi[2]}, {"chi4", &r.chi[3]},
  }};
  for (const auto& [name, m] : zero_col)
    add(std::string("col0 ") + name + " below corner = 0", m->col(0).tail<4>().cwiseAbs().maxCoeff());

  using Row = Eigen::Matrix<double, 1, 5>;
  Row pi_row, plus_row, minus_row;
  pi_row << 0, 0, 0, 0, -z / r.kappa;
  plus_row << 0, 0, 0, std::exp(z / 2), 0;
  minus_row << 0, 0, -std::exp(-z / 2), 0, 0;
  add("row0 pi = (0,0,0,0,<chi4,pi>)", (r.pi.row(0) - pi_row).cwiseAbs().maxCoeff());
  add("row0 pi+ = (0,0,0,<chi3,pi+>,0)", (r.pi_plus.row(0) - plus_row).cwiseAbs().maxCoeff());
  add("row0 pi- = (0,0,<chi2,pi->,0,0)", (r.pi_minus.row(0) - minus_row).cwiseAbs().maxCoeff());
  add("pi(0,4) = -z/kappa", std::abs(r.pi(0, 4) + z / r.kappa));
  add("pi+(0,3) = e^{z/2}", std::abs(r.pi_plus(0, 3) - std::exp(z / 2)));
  add("kappa = 2 e^{-z/4} sinh(z/2)", std::abs(r.kappa - 2 * std::exp(-z / 4) * std::sinh(z / 2)));

  Mat5 series = (-r.pi).exp();
  add("e^{-pi} closed form = series", max_norm(series - r.exp_minus_pi));
  Mat5 zj = (z * r.J).exp();
  add("e^{zJ} closed form = series", max_norm(zj - r.exp_zJ));
  add("e^{-zJ} closed form = series", max_norm((-z * r.J).exp() - r.exp_minus_zJ));
  return rep;
}

const std::array<std::array<const char*, 4>, 4>& eq2_reference_f() {
  static const std::array<std::array<const char*, 4>, 4> f = {{
      {"e^{zJ}", "0", "0", "0"},
      {"kappa e^{z/2} b+", "1", "0", "0"},
      {"-kappa e^{-z/2} b- e^{zJ}", "0", "1", "0"},
      {"-kappa^2 b- b+", "-kappa e^{-z/2} b-", "kappa e^{z/2} e^{-zJ} b+", "e^{-zJ}"},
  }};
  return f;
}

const std::array<std::array<const char*, 4>, 4>& eq2_reference_R() {
  static const std::array<std::array<const char*, 4>, 4> R = {{
      {"1", "0", "0", "0"},
      {"-e^{z/4} nbar", "vbar", "0", "0"},
      {"-e^{z/4} n", "0", "v", "0"},
      {"e^{z/2} n nbar", "-e^{z/4} n vbar", "-e^{z/4} v nbar", "1"},
  }};
  return R;
}

}  // namespace hopfdouble
