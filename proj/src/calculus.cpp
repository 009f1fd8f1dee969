#include "hopfdouble/calculus.hpp"

#include <random>

namespace hopfdouble {
namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

std::string ij(const char* a, int x, const char* b, int y) {
  return std::string(a) + "=" + std::to_string(x) + "," + b + "=" + std::to_string(y);
}

// ad_{e^P}(e^Q) for all P, Q
std::vector<std::vector<Vec>> adjoint_table(const HopfPtr& u) {
  const int d = u->dim();
  std::vector<std::vector<Vec>> t(sz(d));
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q)
      t[sz(p)].push_back(adjoint_action(AlgebraElement::basis(u, p), AlgebraElement::basis(u, q)).coords);
  return t;
}

bool components_independent(const ChiTuple& chi) { return rank(chi) == chi.size(); }

}  // namespace

Vec flatten(const ChiTuple& chi) {
  Vec out;
  for (const auto& c : chi) out.insert(out.end(), c.begin(), c.end());
  return out;
}

ChiTuple unflatten(const Vec& flat, int n, int d) {
  if (flat.size() != sz(n * d)) throw DimensionMismatch("flat chi vector has wrong length");
  ChiTuple chi(sz(n));
  for (int i = 0; i < n; ++i) chi[sz(i)].assign(flat.begin() + i * d, flat.begin() + (i + 1) * d);
  return chi;
}

std::vector<Vec> solve_chi_space(const DoubleRepresentation& rho) {
  const HopfAlgebra& F = *rho.D->F();
  const HopfData& h = F.data();
  const int d = F.dim();
  const int n = rho.n;
  BicovariantBimodule b = rep_to_bimodule(rho);
  auto col = [d](int i, int a) { return sz(i * d + a); };
  RowEchelon sys(sz(n * d));

  for (int i = 0; i < n; ++i)
    for (int a = 0; a < d; ++a)
      for (int bb = 0; bb < d; ++bb) {
        SparseRow row;
        for (const auto& e : h.mult.slice(a, bb)) row.emplace_back(col(i, e.k), e.value);
        for (int j = 0; j < n; ++j) {
          const Scalar& f = rho.rhoF[sz(bb)](sz(j), sz(i));
          if (!f.is_zero()) row.emplace_back(col(j, a), -f);
        }
        if (!h.counit[sz(a)].is_zero()) row.emplace_back(col(i, bb), -h.counit[sz(a)]);
        sys.insert(row);
      }
  for (int i = 0; i < n; ++i) {
    SparseRow row;
    for (int a = 0; a < d; ++a)
      if (!h.unit[sz(a)].is_zero()) row.emplace_back(col(i, a), h.unit[sz(a)]);
    sys.insert(row);
  }
  auto ad = adjoint_table(rho.D->U());
  for (int p = 0; p < d; ++p)
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < d; ++c) {
        SparseRow row;
        for (int q = 0; q < d; ++q) {
          const Scalar& v = ad[sz(p)][sz(q)][sz(c)];
          if (!v.is_zero()) row.emplace_back(col(i, q), v);
        }
        for (int k = 0; k < n; ++k) {
          const Scalar& r = b.R_at(i, k)[sz(p)];
          if (!r.is_zero()) row.emplace_back(col(k, c), -r);
        }
        sys.insert(row);
      }
  return sys.kernel();
}

ChiSelection select_independent_chi(const std::vector<Vec>& space, int n, int d, const SelectionOptions& options) {
  ChiSelection out;
  if (n == 0) {
    out.status = SelectionStatus::found;
    return out;
  }
  std::vector<Vec> all;
  for (const auto& v : space)
    for (auto& c : unflatten(v, n, d)) all.push_back(std::move(c));
  if (all.empty() || rank(all) < sz(n)) return out;

  auto accept = [&](const Vec& v) {
    ChiTuple chi = unflatten(v, n, d);
    if (!components_independent(chi)) return false;
    out.status = SelectionStatus::found;
    out.chi = std::move(chi);
    return true;
  };
  for (const auto& v : space)
    if (accept(v)) return out;
  const int bound = options.coefficient_bound;
  for (std::size_t p = 0; p < space.size(); ++p)
    for (std::size_t q = p + 1; q < space.size(); ++q)
      for (int s = -bound; s <= bound; ++s)
        for (int t = -bound; t <= bound; ++t) {
          if (s == 0 || t == 0) continue;
          Vec v = Scalar(s) * space[p];
          axpy(Scalar(t), space[q], v);
          if (accept(v)) return out;
        }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int draw = 0; draw < options.random_draws; ++draw) {
    Vec v(space.front().size());
    for (const auto& s : space) axpy(Scalar(coef(rng)), s, v);
    if (accept(v)) return out;
  }
  out.status = SelectionStatus::search_exhausted;
  return out;
}

DoubleRepresentation extend_representation(const DoubleRepresentation& rho, const ChiTuple& chi) {
  const HopfAlgebra& F = *rho.D->F();
  const HopfAlgebra& U = *rho.D->U();
  const int d = F.dim();
  const int n = rho.n;
  if (chi.size() != sz(n)) throw DimensionMismatch("chi tuple length differs from representation dimension");
  DoubleRepresentation ext{rho.D, n + 1, {}, {}};
  for (int a = 0; a < d; ++a) {
    Matrix f(sz(n + 1), sz(n + 1)), u(sz(n + 1), sz(n + 1));
    f(0, 0) = F.data().counit[sz(a)];
    u(0, 0) = U.data().counit[sz(a)];
    for (int i = 0; i < n; ++i) {
      f(0, sz(i + 1)) = chi[sz(i)][sz(a)];
      for (int j = 0; j < n; ++j) {
        f(sz(i + 1), sz(j + 1)) = rho.rhoF[sz(a)](sz(i), sz(j));
        u(sz(i + 1), sz(j + 1)) = rho.rhoU[sz(a)](sz(i), sz(j));
      }
    }
    ext.rhoF.push_back(std::move(f));
    ext.rhoU.push_back(std::move(u));
  }
  Report rep = verify_double_rep(ext);
  if (!rep.passed()) throw VerificationFailure(rep);
  return ext;
}

Report check_quasitriangular_chi(const DoubleRepresentation& rho, const ChiTuple& chi) {
  const HopfData& h = rho.D->F()->data();
  const int d = h.dim;
  const int n = rho.n;
  Report rep;
  std::string w;
  for (int c = 0; c < d && w.empty(); ++c)
    for (int e = 0; e < d && w.empty(); ++e)
      for (int j = 0; j < n && w.empty(); ++j) {
        Scalar lhs, rhs;
        for (const auto& t : h.comult.slice(c)) {
          // t = Delta_C^{AB} with A = t.j, B = t.k
          for (const auto& m : h.mult.slice(t.k))
            if (m.k == e)
              for (int i = 0; i < n; ++i) lhs += t.value * m.value * chi[sz(i)][sz(t.j)] * rho.rhoU[sz(m.j)](sz(i), sz(j));
          if (t.j == e) rhs += t.value * chi[sz(j)][sz(t.k)];
        }
        if (lhs != rhs) w = "C=" + std::to_string(c) + ",E=" + std::to_string(e) + ",j=" + std::to_string(j);
      }
  rep.add("quasitriangularity_on_chi", w.empty(), w);
  return rep;
}

std::optional<std::pair<DoubleRepresentation, ChiTuple>> chi_from_extended(const DoubleRepresentation& ext) {
  const HopfAlgebra& F = *ext.D->F();
  const HopfAlgebra& U = *ext.D->U();
  const int d = F.dim();
  const int n = ext.n - 1;
  if (n < 0) return std::nullopt;
  DoubleRepresentation inner{ext.D, n, {}, {}};
  ChiTuple chi(sz(n), Vec(sz(d)));
  for (int a = 0; a < d; ++a) {
    const Matrix& f = ext.rhoF[sz(a)];
    const Matrix& u = ext.rhoU[sz(a)];
    if (f(0, 0) != F.data().counit[sz(a)] || u(0, 0) != U.data().counit[sz(a)]) return std::nullopt;
    Matrix fi(sz(n), sz(n)), ui(sz(n), sz(n));
    for (int i = 0; i < n; ++i) {
      if (!f(sz(i + 1), 0).is_zero() || !u(sz(i + 1), 0).is_zero() || !u(0, sz(i + 1)).is_zero()) return std::nullopt;
      chi[sz(i)][sz(a)] = f(0, sz(i + 1));
      for (int j = 0; j < n; ++j) {
        fi(sz(i), sz(j)) = f(sz(i + 1), sz(j + 1));
        ui(sz(i), sz(j)) = u(sz(i + 1), sz(j + 1));
      }
    }
    inner.rhoF.push_back(std::move(fi));
    inner.rhoU.push_back(std::move(ui));
  }
  return std::make_pair(std::move(inner), std::move(chi));
}

Report verify_chi(const DoubleRepresentation& rho, const ChiTuple& chi) {
  const HopfAlgebra& F = *rho.D->F();
  const HopfPtr& U = rho.D->U();
  const int d = F.dim();
  const int n = rho.n;
  if (chi.size() != sz(n)) throw DimensionMismatch("chi tuple length differs from representation dimension");
  BicovariantBimodule b = rep_to_bimodule(rho);
  Report rep;
  std::string w;
  for (int i = 0; i < n && w.empty(); ++i)
    for (int a = 0; a < d && w.empty(); ++a)
      for (int bb = 0; bb < d && w.empty(); ++bb) {
        Scalar lhs = dot(chi[sz(i)], F.multiply(F.basis(a), F.basis(bb)));
        Scalar rhs = F.counit(F.basis(a)) * chi[sz(i)][sz(bb)];
        for (int j = 0; j < n; ++j) rhs += chi[sz(j)][sz(a)] * b.f_at(j, i)[sz(bb)];
        if (lhs != rhs) w = "i=" + std::to_string(i) + "," + F.label(a) + "," + F.label(bb);
      }
  rep.add("coproduct", w.empty(), w);
  w.clear();
  for (int i = 0; i < n && w.empty(); ++i)
    if (!dot(chi[sz(i)], F.one()).is_zero()) w = "i=" + std::to_string(i);
  rep.add("counit", w.empty(), w);
  w.clear();
  for (int p = 0; p < d && w.empty(); ++p)
    for (int i = 0; i < n && w.empty(); ++i) {
      Vec lhs = adjoint_action(AlgebraElement::basis(U, p), {U, chi[sz(i)]}).coords;
      Vec rhs(sz(d));
      for (int k = 0; k < n; ++k) axpy(b.R_at(i, k)[sz(p)], chi[sz(k)], rhs);
      if (lhs != rhs) w = U->label(p) + ",i=" + std::to_string(i);
    }
  rep.add("adjoint", w.empty(), w);
  return rep;
}

FirstOrderCalculus make_calculus(const DoubleRepresentation& rho, const ChiTuple& chi) {
  Report rep = verify_chi(rho, chi);
  if (!rep.passed()) throw VerificationFailure(rep);
  FirstOrderCalculus c{rep_to_bimodule(rho), rho, chi, extend_representation(rho, chi), false};
  c.degenerate = !components_independent(chi);
  return c;
}

GammaElement differential(const Vec& a, const FirstOrderCalculus& c) {
  GammaElement g = gamma_zero(c.bimodule);
  AlgebraElement x{c.bimodule.D->F(), a};
  for (int i = 0; i < c.bimodule.n; ++i)
    g.coords[sz(i)] = star_left({c.bimodule.D->U(), c.chi[sz(i)]}, x).coords;
  return g;
}

Report verify_leibniz(const FirstOrderCalculus& c) {
  const HopfAlgebra& F = *c.bimodule.D->F();
  const int d = F.dim();
  Report rep;
  GammaElement d1 = differential(F.one(), c);
  rep.add("d1_zero", d1 == gamma_zero(c.bimodule), d1 == gamma_zero(c.bimodule) ? "" : "d(1) != 0");
  std::vector<GammaElement> da;
  for (int a = 0; a < d; ++a) da.push_back(differential(F.basis(a), c));
  std::string w;
  for (int a = 0; a < d && w.empty(); ++a)
    for (int b = 0; b < d && w.empty(); ++b) {
      GammaElement lhs = differential(F.multiply(F.basis(a), F.basis(b)), c);
      GammaElement rhs = left_multiply(c.bimodule, F.basis(a), da[sz(b)]);
      GammaElement r2 = right_multiply(c.bimodule, da[sz(a)], F.basis(b));
      for (int i = 0; i < c.bimodule.n; ++i) rhs.coords[sz(i)] += r2.coords[sz(i)];
      if (lhs != rhs) w = F.label(a) + "," + F.label(b);
    }
  rep.add("leibniz", w.empty(), w);
  return rep;
}

IdealJ ideal_J(const FirstOrderCalculus& c) {
  const HopfPtr& F = c.bimodule.D->F();
  const int d = F->dim();
  std::vector<Vec> functionals{F->data().counit};
  for (const auto& x : c.chi) functionals.push_back(x);
  RowEchelon sys(sz(d));
  for (const auto& l : functionals) sys.insert(l);
  IdealJ out;
  out.basis = sys.kernel();
  std::string w;
  for (std::size_t k = 0; k < out.basis.size() && w.empty(); ++k) {
    Tensor2 t = ad_star({F, out.basis[k]});
    for (std::size_t l = 0; l < functionals.size() && w.empty(); ++l) {
      Vec second(sz(d));
      for (const auto& [key, v] : t) second[sz(key.second)] += functionals[l][sz(key.first)] * v;
      if (!is_zero(second)) w = "basis vector " + std::to_string(k);
    }
  }
  out.invariance.add("ad_star_invariant", w.empty(), w);
  return out;
}

bool left_right_relation_check(const FirstOrderCalculus& c, const Vec& a) {
  const HopfPtr& F = c.bimodule.D->F();
  const HopfPtr& U = c.bimodule.D->U();
  AlgebraElement x{F, a};
  for (int i = 0; i < c.bimodule.n; ++i) {
    Vec lhs = star_right(x, {U, c.chi[sz(i)]}).coords;
    Vec rhs(sz(F->dim()));
    for (int j = 0; j < c.bimodule.n; ++j)
      rhs += F->multiply(star_left({U, c.chi[sz(j)]}, x).coords, c.bimodule.R_at(i, j));
    if (lhs != rhs) return false;
  }
  return true;
}

ExtendedLambda extended_lambda(const FirstOrderCalculus& c) {
  const int n = c.bimodule.n;
  const int m = n + 1;
  BicovariantBimodule ext = rep_to_bimodule(c.extended);
  ExtendedLambda out{lambda_matrix(ext), {}};
  Matrix inner = lambda_matrix(c.bimodule);
  std::string w;
  for (int a = 0; a < m && w.empty(); ++a)
    for (int b = 0; b < m && w.empty(); ++b)
      for (int cc = 0; cc < m && w.empty(); ++cc)
        for (int e = 0; e < m && w.empty(); ++e) {
          Scalar expect;
          if (a > 0 && b > 0 && cc > 0 && e > 0)
            expect = inner(sz((a - 1) * n + b - 1), sz((cc - 1) * n + e - 1));
          else if (a > 0 && b == 0 && cc > 0 && e > 0)
            expect = dot(c.chi[sz(e - 1)], c.bimodule.R_at(cc - 1, a - 1));
          else if (b == 0 && e == 0)
            expect = a == cc ? 1 : 0;
          else if (a == 0 && cc == 0)
            expect = b == e ? 1 : 0;
          if (out.lambda(sz(a * m + b), sz(cc * m + e)) != expect)
            w = ij("row", a * m + b, "col", cc * m + e);
        }
  out.report.add("block_pattern", w.empty(), w);
  out.report.add("qybe", check_qybe(out.lambda, m));
  return out;
}

}  // namespace hopfdouble
