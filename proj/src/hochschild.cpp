#include "hopfdouble/hochschild.hpp"

#include <functional>

namespace hopfdouble {
namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

int ipow(int base, int k) {
  int r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

int tuple_index(const std::vector<int>& args, int n) {
  int t = 0;
  for (int a : args) t = t * n + a;
  return t;
}

std::vector<int> tuple_of(int t, int k, int n) {
  std::vector<int> args(sz(k));
  for (int i = k - 1; i >= 0; --i) {
    args[sz(i)] = t % n;
    t /= n;
  }
  return args;
}

// One row of delta^k per (k+1)-tuple and component, as sparse coefficients on
// the values of a k-cochain.
void coboundary_rows(const CoefficientBimodule& b, int k, const std::function<void(int, int, const SparseRow&)>& emit) {
  const int n = b.algebra->dim();
  const int m = b.m;
  const HopfData& h = b.algebra->data();
  const int tuples = ipow(n, k + 1);
  for (int t = 0; t < tuples; ++t) {
    std::vector<int> args = tuple_of(t, k + 1, n);
    for (int r = 0; r < m; ++r) {
      SparseRow row;
      std::vector<int> tail(args.begin() + 1, args.end());
      int base = tuple_index(tail, n) * m;
      const Matrix& l = b.left[sz(args[0])];
      for (int c = 0; c < m; ++c)
        if (!l(sz(r), sz(c)).is_zero()) row.emplace_back(sz(base + c), l(sz(r), sz(c)));
      for (int i = 1; i <= k; ++i) {
        Scalar sign(i % 2 ? -1 : 1);
        for (const auto& e : h.mult.slice(args[sz(i - 1)], args[sz(i)])) {
          std::vector<int> merged;
          for (int j = 0; j <= k; ++j) {
            if (j == i) continue;
            merged.push_back(j == i - 1 ? e.k : args[sz(j)]);
          }
          row.emplace_back(sz(tuple_index(merged, n) * m + r), sign * e.value);
        }
      }
      std::vector<int> head(args.begin(), args.end() - 1);
      base = tuple_index(head, n) * m;
      Scalar sign((k + 1) % 2 ? -1 : 1);
      const Matrix& rr = b.right[sz(args[sz(k)])];
      for (int c = 0; c < m; ++c)
        if (!rr(sz(r), sz(c)).is_zero()) row.emplace_back(sz(base + c), sign * rr(sz(r), sz(c)));
      emit(t, r, row);
    }
  }
}

Vec apply_row(const SparseRow& row, const Vec& v) {
  Scalar s;
  for (const auto& [c, x] : row)
    if (!v[c].is_zero()) s += x * v[c];
  return {s};
}

Vec phi_hat_value(const DrinfeldDouble& d, int alpha) {
  const HopfAlgebra& F = *d.F();
  const HopfAlgebra& U = *d.U();
  auto [a, x] = d.split(alpha);
  Vec v = big_ad(F, U.antipode(U.basis(x)), F.basis(a));
  Scalar c = U.counit(U.basis(x)) * F.counit(F.basis(a));
  if (!c.is_zero()) axpy(-c, F.one(), v);
  return v;
}

std::vector<Vec> unit_vectors(int m) {
  std::vector<Vec> out;
  for (int i = 0; i < m; ++i) out.push_back(unit_vec(sz(m), sz(i)));
  return out;
}

}  // namespace

CoefficientBimodule inv_gamma_bimodule(const DoubleRepresentation& rho, Base base) {
  CoefficientBimodule b;
  b.m = rho.n;
  b.rep = rho;
  Matrix id = Matrix::identity(sz(rho.n));
  if (base == Base::D) {
    b.algebra = rho.D->hopf();
    for (int i = 0; i < b.algebra->dim(); ++i) {
      b.left.push_back(b.algebra->data().counit[sz(i)] * id);
      b.right.push_back(rho.of(b.algebra->basis(i)).transpose());
    }
  } else {
    b.algebra = rho.D->F();
    for (int i = 0; i < b.algebra->dim(); ++i) {
      b.left.push_back(b.algebra->data().counit[sz(i)] * id);
      b.right.push_back(rho.rhoF[sz(i)].transpose());
    }
  }
  return b;
}

CoefficientBimodule ker_epsilon_bimodule(const DoublePtr& d) {
  const HopfAlgebra& F = *d->F();
  const HopfAlgebra& U = *d->U();
  const int n = F.dim();
  CoefficientBimodule b;
  b.algebra = d->hopf();
  b.m = n;
  Matrix id = Matrix::identity(sz(n));
  for (int alpha = 0; alpha < d->dim(); ++alpha) {
    auto [a, x] = d->split(alpha);
    b.left.push_back(b.algebra->data().counit[sz(alpha)] * id);
    Vec sx = U.antipode(U.basis(x));
    Matrix r(sz(n), sz(n));
    for (int k = 0; k < n; ++k) {
      Vec img = big_ad(F, sx, F.multiply(F.basis(k), F.basis(a)));
      for (int j = 0; j < n; ++j) r(sz(j), sz(k)) = img[sz(j)];
    }
    b.right.push_back(std::move(r));
  }
  return b;
}

Report verify_bimodule_axioms(const CoefficientBimodule& b, const std::vector<Vec>& carrier_in) {
  const HopfAlgebra& A = *b.algebra;
  const int n = A.dim();
  std::vector<Vec> carrier = carrier_in.empty() ? unit_vectors(b.m) : carrier_in;
  auto combine = [&](const std::vector<Matrix>& mats, const Vec& coeffs) {
    Matrix r(sz(b.m), sz(b.m));
    for (int i = 0; i < n; ++i)
      if (!coeffs[sz(i)].is_zero()) r += coeffs[sz(i)] * mats[sz(i)];
    return r;
  };
  Report rep;
  std::string wl, wr, wm;
  Matrix id = Matrix::identity(sz(b.m));
  for (const auto& v : carrier) {
    if (combine(b.left, A.one()).apply(v) != v && wl.empty()) wl = "unit";
    if (combine(b.right, A.one()).apply(v) != v && wr.empty()) wr = "unit";
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec xy = A.multiply(A.basis(x), A.basis(y));
      Matrix lxy = combine(b.left, xy), rxy = combine(b.right, xy);
      for (std::size_t k = 0; k < carrier.size(); ++k) {
        const Vec& v = carrier[k];
        std::string here = A.label(x) + "," + A.label(y) + ",v" + std::to_string(k);
        if (wl.empty() && lxy.apply(v) != b.left[sz(x)].apply(b.left[sz(y)].apply(v))) wl = here;
        if (wr.empty() && rxy.apply(v) != b.right[sz(y)].apply(b.right[sz(x)].apply(v))) wr = here;
        if (wm.empty() && b.right[sz(y)].apply(b.left[sz(x)].apply(v)) != b.left[sz(x)].apply(b.right[sz(y)].apply(v)))
          wm = here;
      }
    }
  rep.add("left_module", wl.empty(), wl);
  rep.add("right_module", wr.empty(), wr);
  rep.add("actions_commute", wm.empty(), wm);
  return rep;
}

Cochain zero_cochain(const CoefficientBimodule& b, int degree) {
  return {degree, Vec(sz(ipow(b.algebra->dim(), degree) * b.m))};
}

Vec cochain_at(const CoefficientBimodule& b, const Cochain& c, const std::vector<int>& args) {
  int base = tuple_index(args, b.algebra->dim()) * b.m;
  return Vec(c.values.begin() + base, c.values.begin() + base + b.m);
}

Vec evaluate(const CoefficientBimodule& b, const Cochain& c, const Vec& alpha) {
  Vec r(sz(b.m));
  for (int i = 0; i < b.algebra->dim(); ++i)
    if (!alpha[sz(i)].is_zero()) axpy(alpha[sz(i)], cochain_at(b, c, {i}), r);
  return r;
}

Cochain coboundary(const CoefficientBimodule& b, const Cochain& phi) {
  if (phi.values.size() != sz(ipow(b.algebra->dim(), phi.degree) * b.m))
    throw DimensionMismatch("cochain size does not match its degree");
  Cochain out = zero_cochain(b, phi.degree + 1);
  coboundary_rows(b, phi.degree, [&](int t, int r, const SparseRow& row) {
    out.values[sz(t * b.m + r)] = apply_row(row, phi.values)[0];
  });
  return out;
}

CohomologyReport cohomology_spaces(const CoefficientBimodule& b, int k) {
  if (k < 0 || k > 1) throw Error("cohomology is computed in degrees 0 and 1 only");
  const int cols = ipow(b.algebra->dim(), k) * b.m;
  CohomologyReport out;
  out.degree = k;
  RowEchelon sys(sz(cols));
  coboundary_rows(b, k, [&](int, int, const SparseRow& row) { sys.insert(row); });
  out.cocycles = sys.kernel();
  if (k == 1) {
    std::vector<Vec> images;
    for (const auto& e : unit_vectors(b.m)) images.push_back(coboundary(b, {0, e}).values);
    for (auto i : independent_subset(images)) out.coboundaries.push_back(images[i]);
  }
  RowEchelon span(sz(cols));
  for (const auto& v : out.coboundaries) span.insert(v);
  for (const auto& z : out.cocycles)
    if (span.insert(z)) out.classes.push_back(z);
  bool contained = true;
  for (const auto& v : out.coboundaries)
    if (!is_zero(coboundary(b, {k, v}).values)) contained = false;
  out.report.add("B_in_Z", contained, contained ? "" : "coboundary with nonzero delta");
  bool dims = span.rank() == out.cocycles.size();
  out.report.add("dim_H", dims, dims ? "" : "Z does not contain B");
  return out;
}

Cochain calculus_to_cocycle(const FirstOrderCalculus& c) {
  const DoubleRepresentation& rho = c.rep;
  const int d = rho.D->base_dim();
  const int n = rho.n;
  CoefficientBimodule b = inv_gamma_bimodule(rho, Base::D);
  Cochain phi = zero_cochain(b, 1);
  for (int a = 0; a < d; ++a)
    for (int x = 0; x < d; ++x)
      for (int i = 0; i < n; ++i) {
        Scalar s;
        for (int j = 0; j < n; ++j) s += rho.rhoU[sz(x)](sz(j), sz(i)) * c.chi[sz(j)][sz(a)];
        phi.values[sz(rho.D->index(a, x) * n + i)] = s;
      }
  Report rep;
  rep.add("cocycle", is_zero(coboundary(b, phi).values));
  bool vanishes = true;
  for (int x = 0; x < d; ++x)
    if (!is_zero(evaluate(b, phi, rho.D->embed_U(rho.D->U()->basis(x))))) vanishes = false;
  rep.add("vanishes_on_U", vanishes);
  if (!rep.passed()) throw VerificationFailure(rep);
  return phi;
}

FirstOrderCalculus cocycle_to_calculus(const DoubleRepresentation& rho, const Cochain& phi) {
  CoefficientBimodule b = inv_gamma_bimodule(rho, Base::D);
  const int d = rho.D->base_dim();
  Report rep;
  rep.add("cocycle", is_zero(coboundary(b, phi).values));
  bool vanishes = true;
  for (int x = 0; x < d; ++x)
    if (!is_zero(evaluate(b, phi, rho.D->embed_U(rho.D->U()->basis(x))))) vanishes = false;
  rep.add("vanishes_on_U", vanishes);
  if (!rep.passed()) throw VerificationFailure(rep);
  ChiTuple chi(sz(rho.n), Vec(sz(d)));
  for (int a = 0; a < d; ++a) {
    Vec v = evaluate(b, phi, rho.D->embed_F(rho.D->F()->basis(a)));
    for (int i = 0; i < rho.n; ++i) chi[sz(i)][sz(a)] = v[sz(i)];
  }
  return make_calculus(rho, chi);
}

Cochain restrict_to_F(const DoublePtr& d, const Cochain& phi) {
  const int n = d->base_dim();
  const int m = static_cast<int>(phi.values.size()) / d->dim();
  Cochain psi{1, Vec(sz(n * m))};
  for (int a = 0; a < n; ++a) {
    Vec e = d->embed_F(d->F()->basis(a));
    for (int alpha = 0; alpha < d->dim(); ++alpha)
      if (!e[sz(alpha)].is_zero())
        for (int r = 0; r < m; ++r) psi.values[sz(a * m + r)] += e[sz(alpha)] * phi.values[sz(alpha * m + r)];
  }
  return psi;
}

Cochain extend_by_universal(const DoublePtr& d, const Cochain& psi, int m) {
  const int n = d->base_dim();
  Cochain phi{1, Vec(sz(d->dim() * m))};
  for (int alpha = 0; alpha < d->dim(); ++alpha) {
    Vec h = phi_hat_value(*d, alpha);
    for (int k = 0; k < n; ++k)
      if (!h[sz(k)].is_zero())
        for (int r = 0; r < m; ++r) phi.values[sz(alpha * m + r)] += h[sz(k)] * psi.values[sz(k * m + r)];
  }
  return phi;
}

Cochain bullet_action(const CoefficientBimodule& b, const Cochain& psi, const Vec& x) {
  if (!b.rep) throw Error("bullet action needs invGamma coefficients");
  const DoubleRepresentation& rho = *b.rep;
  const HopfAlgebra& F = *rho.D->F();
  const HopfAlgebra& U = *rho.D->U();
  if (b.algebra != rho.D->F()) throw ParentMismatch("bullet action is defined on cochains over F");
  const int n = F.dim();
  const int k = psi.degree;
  const int m = b.m;

  // iterated plain coproduct with k+1 legs
  std::map<std::vector<int>, Scalar> terms;
  for (int i = 0; i < n; ++i)
    if (!x[sz(i)].is_zero()) terms[{i}] = x[sz(i)];
  for (int leg = 1; leg <= k; ++leg) {
    std::map<std::vector<int>, Scalar> next;
    for (const auto& [key, v] : terms)
      for (const auto& [p, c] : plain_coproduct(U, U.basis(key.back()))) {
        std::vector<int> nk(key.begin(), key.end() - 1);
        nk.push_back(p.first);
        nk.push_back(p.second);
        next[nk] += v * c;
      }
    terms = std::move(next);
  }

  std::vector<std::vector<Vec>> ad(sz(n));
  for (int y = 0; y < n; ++y)
    for (int a = 0; a < n; ++a) ad[sz(y)].push_back(big_ad(F, U.basis(y), F.basis(a)));

  Cochain out = zero_cochain(b, k);
  const int tuples = ipow(n, k);
  for (int t = 0; t < tuples; ++t) {
    std::vector<int> args = tuple_of(t, k, n);
    Vec acc(sz(m));
    for (const auto& [key, v] : terms) {
      if (v.is_zero()) continue;
      // argument j is Ad_{X_(k-j)} a_j, expanded multilinearly
      Vec val(sz(m));
      std::vector<int> cur(sz(k));
      std::function<void(int, Scalar)> expand = [&](int j, Scalar coef) {
        if (j == k) {
          axpy(coef, cochain_at(b, psi, cur), val);
          return;
        }
        const Vec& img = ad[sz(key[sz(k - 1 - j)])][sz(args[sz(j)])];
        for (int c = 0; c < n; ++c)
          if (!img[sz(c)].is_zero()) {
            cur[sz(j)] = c;
            expand(j + 1, coef * img[sz(c)]);
          }
      };
      expand(0, Scalar(1));
      axpy(v, rho.rhoU[sz(key[sz(k)])].transpose().apply(val), acc);
    }
    for (int r = 0; r < m; ++r) out.values[sz(t * m + r)] = acc[sz(r)];
  }
  return out;
}

std::vector<Vec> invariant_subspace(const CoefficientBimodule& b, const std::vector<Vec>& space, int degree) {
  if (space.empty()) return {};
  const HopfAlgebra& U = *b.rep->D->U();
  const std::size_t len = space.front().size();
  // column j: the defect psi_j . X - eps(X) psi_j stacked over all X
  std::vector<Vec> defects;
  for (const auto& s : space) {
    Vec col;
    for (int x = 0; x < U.dim(); ++x) {
      Vec v = bullet_action(b, {degree, s}, U.basis(x)).values;
      axpy(-U.counit(U.basis(x)), s, v);
      col.insert(col.end(), v.begin(), v.end());
    }
    defects.push_back(std::move(col));
  }
  RowEchelon sys(space.size());
  for (std::size_t r = 0; r < defects.front().size(); ++r) {
    SparseRow row;
    for (std::size_t j = 0; j < space.size(); ++j)
      if (!defects[j][r].is_zero()) row.emplace_back(j, defects[j][r]);
    sys.insert(row);
  }
  std::vector<Vec> out;
  for (const auto& t : sys.kernel()) {
    Vec v(len);
    for (std::size_t j = 0; j < space.size(); ++j)
      if (!t[j].is_zero()) axpy(t[j], space[j], v);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> invariant_cocycles(const CoefficientBimodule& b) {
  return invariant_subspace(b, cohomology_spaces(b, 1).cocycles, 1);
}

std::vector<Vec> calculus_cocycles(const CoefficientBimodule& b) {
  const DoubleRepresentation& rho = *b.rep;
  const int m = b.m;
  RowEchelon sys(sz(b.algebra->dim() * m));
  coboundary_rows(b, 1, [&](int, int, const SparseRow& row) { sys.insert(row); });
  for (int x = 0; x < rho.D->base_dim(); ++x) {
    Vec e = rho.D->embed_U(rho.D->U()->basis(x));
    for (int r = 0; r < m; ++r) {
      SparseRow row;
      for (int alpha = 0; alpha < b.algebra->dim(); ++alpha)
        if (!e[sz(alpha)].is_zero()) row.emplace_back(sz(alpha * m + r), e[sz(alpha)]);
      sys.insert(row);
    }
  }
  return sys.kernel();
}

Report verify_cocycle_correspondence(const DoubleRepresentation& rho) {
  CoefficientBimodule bF = inv_gamma_bimodule(rho, Base::F);
  CoefficientBimodule bD = inv_gamma_bimodule(rho, Base::D);
  const int m = rho.n;
  const HopfAlgebra& U = *rho.D->U();
  std::vector<Vec> inv = invariant_cocycles(bF);
  std::vector<Vec> calc = calculus_cocycles(bD);
  Report rep;
  bool same = inv.size() == calc.size();
  rep.add("dimensions_equal", same, same ? "" : std::to_string(inv.size()) + " vs " + std::to_string(calc.size()));

  auto is_invariant_cocycle = [&](const Cochain& psi) {
    if (!is_zero(coboundary(bF, psi).values)) return false;
    for (int x = 0; x < U.dim(); ++x) {
      Vec v = bullet_action(bF, psi, U.basis(x)).values;
      axpy(-U.counit(U.basis(x)), psi.values, v);
      if (!is_zero(v)) return false;
    }
    return true;
  };
  auto vanishes_on_U = [&](const Cochain& phi) {
    for (int x = 0; x < U.dim(); ++x)
      if (!is_zero(evaluate(bD, phi, rho.D->embed_U(U.basis(x))))) return false;
    return true;
  };

  std::string w;
  for (std::size_t k = 0; k < calc.size() && w.empty(); ++k) {
    Cochain phi{1, calc[k]};
    Cochain psi = restrict_to_F(rho.D, phi);
    if (!is_invariant_cocycle(psi) || extend_by_universal(rho.D, psi, m) != phi) w = "basis vector " + std::to_string(k);
  }
  rep.add("restriction_inverse", w.empty(), w);
  w.clear();
  for (std::size_t k = 0; k < inv.size() && w.empty(); ++k) {
    Cochain psi{1, inv[k]};
    Cochain phi = extend_by_universal(rho.D, psi, m);
    if (!is_zero(coboundary(bD, phi).values) || !vanishes_on_U(phi) || restrict_to_F(rho.D, phi) != psi)
      w = "basis vector " + std::to_string(k);
  }
  rep.add("extension_inverse", w.empty(), w);
  w.clear();
  std::vector<Vec> inv0 = invariant_subspace(bF, unit_vectors(m), 0);
  for (std::size_t k = 0; k < inv0.size() && w.empty(); ++k)
    if (!is_invariant_cocycle(coboundary(bF, {0, inv0[k]}))) w = "basis vector " + std::to_string(k);
  rep.add("invariant_0_cochains_to_invariant_cocycles", w.empty(), w);
  return rep;
}

InnerDifferential inner_differential(const DoubleRepresentation& rho, const Vec& gamma) {
  const HopfAlgebra& F = *rho.D->F();
  const HopfAlgebra& U = *rho.D->U();
  const int n = rho.n;
  for (int x = 0; x < U.dim(); ++x) {
    Vec lhs = rho.rhoU[sz(x)].transpose().apply(gamma);
    if (lhs != U.counit(U.basis(x)) * gamma) throw Error("0-cochain is not invariant under " + U.label(x));
  }
  CoefficientBimodule bF = inv_gamma_bimodule(rho, Base::F);
  Cochain dg = coboundary(bF, {0, gamma});
  BicovariantBimodule b = rep_to_bimodule(rho);
  InnerDifferential out;
  for (int a = 0; a < F.dim(); ++a) {
    GammaElement g = gamma_zero(b);
    for (const auto& [k, c] : F.coproduct(F.basis(a))) {
      Vec val = cochain_at(bF, dg, {k.second});
      for (int i = 0; i < n; ++i)
        if (!val[sz(i)].is_zero()) g.coords[sz(i)][sz(k.first)] += c * val[sz(i)];
    }
    out.d.push_back(std::move(g));
  }

  GammaElement form = gamma_zero(b);
  for (int i = 0; i < n; ++i) form.coords[sz(i)] = gamma[sz(i)] * F.one();
  LeftCoaction left_expect;
  RightCoaction right_expect;
  Vec one = F.one();
  for (int p = 0; p < F.dim(); ++p)
    for (int q = 0; q < F.dim(); ++q)
      for (int i = 0; i < n; ++i) {
        Scalar v = one[sz(p)] * one[sz(q)] * gamma[sz(i)];
        if (v.is_zero()) continue;
        left_expect[{p, q, i}] = v;
        right_expect[{q, i, p}] = v;
      }
  out.report.add("left_invariant", left_coaction(b, form) == left_expect);
  out.report.add("right_invariant", right_coaction(b, form) == right_expect);
  std::string w;
  for (int a = 0; a < F.dim() && w.empty(); ++a) {
    GammaElement lhs = left_multiply(b, F.basis(a), form);
    GammaElement rhs = right_multiply(b, form, F.basis(a));
    for (int i = 0; i < n; ++i) lhs.coords[sz(i)] -= rhs.coords[sz(i)];
    if (lhs != out.d[sz(a)]) w = F.label(a);
  }
  out.report.add("commutator", w.empty(), w);
  return out;
}

Cochain universal_cocycle(const DoublePtr& d) {
  const int n = d->base_dim();
  Cochain phi{1, Vec(sz(d->dim() * n))};
  for (int alpha = 0; alpha < d->dim(); ++alpha) {
    Vec v = phi_hat_value(*d, alpha);
    for (int k = 0; k < n; ++k) phi.values[sz(alpha * n + k)] = v[sz(k)];
  }
  return phi;
}

Report verify_universal_cocycle(const DoublePtr& d) {
  const HopfAlgebra& F = *d->F();
  const HopfAlgebra& U = *d->U();
  CoefficientBimodule b = ker_epsilon_bimodule(d);
  Cochain phi = universal_cocycle(d);
  Report rep;

  RowEchelon counit(sz(F.dim()));
  counit.insert(F.data().counit);
  rep.append(verify_bimodule_axioms(b, counit.kernel()), "ker_eps_");

  std::string w;
  for (int alpha = 0; alpha < d->dim() && w.empty(); ++alpha)
    if (!F.counit(cochain_at(b, phi, {alpha})).is_zero()) w = d->hopf()->label(alpha);
  rep.add("values_in_ker_eps", w.empty(), w);
  rep.add("cocycle", is_zero(coboundary(b, phi).values));
  w.clear();
  for (int x = 0; x < U.dim() && w.empty(); ++x)
    if (!is_zero(evaluate(b, phi, d->embed_U(U.basis(x))))) w = U.label(x);
  rep.add("vanishes_on_U", w.empty(), w);
  w.clear();
  for (int a = 0; a < F.dim() && w.empty(); ++a) {
    Vec expect = F.basis(a);
    axpy(-F.counit(F.basis(a)), F.one(), expect);
    if (evaluate(b, phi, d->embed_F(F.basis(a))) != expect) w = F.label(a);
  }
  rep.add("projection_on_F", w.empty(), w);
  return rep;
}

Report universal_differential_check(const DoublePtr& d) {
  const HopfAlgebra& F = *d->F();
  const int n = F.dim();
  Vec one = F.one();
  auto r_map = [&](const Tensor2& x) {
    Tensor2 out;
    for (const auto& [k, v] : x)
      for (const auto& [p, c] : F.coproduct(F.basis(k.second))) {
        Vec left = F.multiply(F.basis(k.first), F.basis(p.first));
        for (int i = 0; i < n; ++i)
          if (!left[sz(i)].is_zero()) add_to(out, i, p.second, v * c * left[sz(i)]);
      }
    prune(out);
    return out;
  };
  auto tensor = [&](const Vec& a, const Vec& b) {
    Tensor2 t;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!a[sz(i)].is_zero() && !b[sz(j)].is_zero()) add_to(t, i, j, a[sz(i)] * b[sz(j)]);
    return t;
  };
  auto minus = [](Tensor2 a, const Tensor2& b) {
    for (const auto& [k, v] : b) add_to(a, k.first, k.second, -v);
    prune(a);
    return a;
  };
  Report rep;
  std::string w, w2;
  for (int a = 0; a < n; ++a) {
    Vec ea = F.basis(a);
    Tensor2 D = minus(tensor(one, ea), tensor(ea, one));
    Tensor2 Dp = minus(F.coproduct(ea), tensor(ea, one));
    if (w.empty() && !tensor_equal(r_map(D), Dp)) w = F.label(a);
    Tensor2 via_cocycle;
    for (const auto& [k, c] : F.coproduct(ea)) {
      Vec h = F.basis(k.second);
      axpy(-F.counit(h), one, h);
      for (int j = 0; j < n; ++j)
        if (!h[sz(j)].is_zero()) add_to(via_cocycle, k.first, j, c * h[sz(j)]);
    }
    if (w2.empty() && !tensor_equal(via_cocycle, Dp)) w2 = F.label(a);
  }
  rep.add("r_D_equals_D_prime", w.empty(), w);
  rep.add("D_prime_from_cocycle", w2.empty(), w2);

  RowEchelon m_map(sz(n * n));
  for (int c = 0; c < n; ++c) {
    SparseRow row;
    for (int i = 0; i < n; ++i)
      for (const auto& e : F.data().mult.slice(i))
        if (e.k == c) row.emplace_back(sz(i * n + e.j), e.value);
    m_map.insert(row);
  }
  w.clear();
  auto kernel = m_map.kernel();
  for (std::size_t k = 0; k < kernel.size() && w.empty(); ++k) {
    Tensor2 x;
    for (int i = 0; i < n * n; ++i)
      if (!kernel[k][sz(i)].is_zero()) add_to(x, i / n, i % n, kernel[k][sz(i)]);
    Vec first(sz(n));
    for (const auto& [key, v] : r_map(x)) first[sz(key.first)] += v * F.data().counit[sz(key.second)];
    if (!is_zero(first)) w = "ker m basis vector " + std::to_string(k);
  }
  rep.add("r_maps_ker_m_into_F_ker_eps", w.empty(), w);
  return rep;
}

DoubleRepresentation universal_representation(const DoublePtr& d) {
  const HopfAlgebra& F = *d->F();
  RowEchelon counit(sz(F.dim()));
  counit.insert(F.data().counit);
  std::vector<Vec> basis = counit.kernel();
  const int n = static_cast<int>(basis.size());
  CoefficientBimodule b = ker_epsilon_bimodule(d);
  auto matrix_of = [&](const Vec& alpha) {
    Matrix act(sz(b.m), sz(b.m));
    for (int i = 0; i < d->dim(); ++i)
      if (!alpha[sz(i)].is_zero()) act += alpha[sz(i)] * b.right[sz(i)];
    // rho(alpha) = (matrix of h -> h . alpha in the kernel basis)^t
    Matrix rho(sz(n), sz(n));
    for (int k = 0; k < n; ++k) {
      auto coords = coordinates_in(basis, act.apply(basis[sz(k)]));
      if (!coords) throw Error("right action leaves ker eps");
      for (int j = 0; j < n; ++j) rho(sz(k), sz(j)) = (*coords)[sz(j)];
    }
    return rho;
  };
  DoubleRepresentation rho{d, n, {}, {}};
  for (int a = 0; a < F.dim(); ++a) {
    rho.rhoF.push_back(matrix_of(d->embed_F(F.basis(a))));
    rho.rhoU.push_back(matrix_of(d->embed_U(d->U()->basis(a))));
  }
  Report rep = verify_double_rep(rho);
  if (!rep.passed()) throw VerificationFailure(rep);
  return rho;
}

}  // namespace hopfdouble
