#include "hopfdouble/bicovariant.hpp"

namespace hopfdouble {
namespace {

using Key4 = std::array<int, 4>;
using Tensor4 = std::map<Key4, Scalar>;

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Vec star_l(const BicovariantBimodule& b, const Vec& f, const Vec& a) {
  return star_left({b.D->U(), f}, {b.D->F(), a}).coords;
}

Vec star_r(const BicovariantBimodule& b, const Vec& a, const Vec& f) {
  return star_right({b.D->F(), a}, {b.D->U(), f}).coords;
}

Matrix combine(const std::vector<Matrix>& mats, const Vec& coeffs, int n) {
  Matrix r(sz(n), sz(n));
  for (std::size_t a = 0; a < coeffs.size(); ++a)
    if (!coeffs[a].is_zero()) r += coeffs[a] * mats[a];
  return r;
}

void require_shapes(const DoubleRepresentation& rho) {
  const int d = rho.D->base_dim();
  if (rho.rhoF.size() != sz(d) || rho.rhoU.size() != sz(d))
    throw DimensionMismatch("representation needs one matrix per basis element of F and of U");
  for (const auto* list : {&rho.rhoF, &rho.rhoU})
    for (const auto& m : *list)
      if (m.rows() != sz(rho.n) || m.cols() != sz(rho.n))
        throw DimensionMismatch("representation matrix is not n x n");
}

template <class Key>
void add_key(std::map<Key, Scalar>& t, const Key& k, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = t.emplace(k, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

Matrix DoubleRepresentation::of_F(const Vec& a) const { return combine(rhoF, a, n); }

Matrix DoubleRepresentation::of_U(const Vec& x) const { return combine(rhoU, x, n); }

Matrix DoubleRepresentation::of(const Vec& alpha) const {
  const int d = D->base_dim();
  Matrix r(sz(n), sz(n));
  for (int i = 0; i < d * d; ++i) {
    if (alpha[sz(i)].is_zero()) continue;
    auto [a, x] = D->split(i);
    r += alpha[sz(i)] * (rhoF[sz(a)] * rhoU[sz(x)]);
  }
  return r;
}

DoubleRepresentation trivial_representation(const DoublePtr& d, int n) {
  DoubleRepresentation rho{d, n, {}, {}};
  Matrix id = Matrix::identity(sz(n));
  for (int a = 0; a < d->base_dim(); ++a) {
    rho.rhoF.push_back(d->F()->counit(d->F()->basis(a)) * id);
    rho.rhoU.push_back(d->U()->counit(d->U()->basis(a)) * id);
  }
  return rho;
}

Report verify_double_rep(const DoubleRepresentation& rho) {
  require_shapes(rho);
  const HopfAlgebra& D = *rho.D->hopf();
  const int N = D.dim();
  std::vector<Matrix> basis;
  basis.reserve(sz(N));
  for (int i = 0; i < N; ++i) {
    auto [a, x] = rho.D->split(i);
    basis.push_back(rho.rhoF[sz(a)] * rho.rhoU[sz(x)]);
  }
  Report rep;
  bool unit_ok = combine(basis, D.one(), rho.n) == Matrix::identity(sz(rho.n));
  rep.add("unit", unit_ok, unit_ok ? "" : "rho(1) != I");
  std::string w;
  for (int x = 0; x < N && w.empty(); ++x)
    for (int y = 0; y < N && w.empty(); ++y) {
      Matrix prod = combine(basis, D.multiply(D.basis(x), D.basis(y)), rho.n);
      if (prod != basis[sz(x)] * basis[sz(y)]) w = D.label(x) + " , " + D.label(y);
    }
  rep.add("multiplicative", w.empty(), w);
  return rep;
}

Report verify_bimodule(const BicovariantBimodule& b) {
  const HopfAlgebra& F = *b.D->F();
  const HopfAlgebra& U = *b.D->U();
  const int n = b.n;
  Report rep;

  // the stored coproduct of U is the flipped one: Delta~ f_ij = f_kj (x) f_ik
  auto corep = [&](const char* name, const HopfAlgebra& h, auto at, bool flipped) {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j) {
        Tensor2 expect;
        for (int k = 0; k < n; ++k) {
          const Vec& l = flipped ? at(k, j) : at(i, k);
          const Vec& r = flipped ? at(i, k) : at(k, j);
          for (std::size_t p = 0; p < l.size(); ++p)
            for (std::size_t q = 0; q < r.size(); ++q)
              if (!l[p].is_zero() && !r[q].is_zero()) add_to(expect, static_cast<int>(p), static_cast<int>(q), l[p] * r[q]);
        }
        if (!tensor_equal(h.coproduct(at(i, j)), expect) || h.counit(at(i, j)) != Scalar(i == j ? 1 : 0))
          w = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
      }
    rep.add(name, w.empty(), w);
  };
  corep("f_corepresentation", U, [&](int i, int j) -> const Vec& { return b.f_at(i, j); }, true);
  corep("R_corepresentation", F, [&](int i, int j) -> const Vec& { return b.R_at(i, j); }, false);

  std::string w;
  for (int a = 0; a < F.dim() && w.empty(); ++a)
    for (int j = 0; j < n && w.empty(); ++j)
      for (int k = 0; k < n && w.empty(); ++k) {
        Vec lhs(sz(F.dim())), rhs(sz(F.dim()));
        for (int i = 0; i < n; ++i) {
          lhs += F.multiply(b.R_at(i, j), star_r(b, F.basis(a), b.f_at(i, k)));
          rhs += F.multiply(star_l(b, b.f_at(j, i), F.basis(a)), b.R_at(k, i));
        }
        if (lhs != rhs) w = F.label(a) + ",j=" + std::to_string(j) + ",k=" + std::to_string(k);
      }
  rep.add("compatibility", w.empty(), w);
  return rep;
}

BicovariantBimodule rep_to_bimodule(const DoubleRepresentation& rho) {
  Report in = verify_double_rep(rho);
  if (!in.passed()) throw VerificationFailure(in);
  const HopfAlgebra& U = *rho.D->U();
  const int d = rho.D->base_dim();
  const int n = rho.n;
  BicovariantBimodule b{rho.D, n, {}, {}};
  b.f.assign(sz(n), std::vector<Vec>(sz(n), Vec(sz(d))));
  b.R.assign(sz(n), std::vector<Vec>(sz(n), Vec(sz(d))));
  for (int a = 0; a < d; ++a) {
    Matrix q = rho.of_U(U.antipode_inv(U.basis(a)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        b.f[sz(i)][sz(j)][sz(a)] = rho.rhoF[sz(a)](sz(i), sz(j));
        b.R[sz(i)][sz(j)][sz(a)] = q(sz(j), sz(i));
      }
  }
  Report out = verify_bimodule(b);
  if (!out.passed()) throw VerificationFailure(out);
  return b;
}

DoubleRepresentation bimodule_to_rep(const BicovariantBimodule& b) {
  Report in = verify_bimodule(b);
  if (!in.passed()) throw VerificationFailure(in);
  const HopfAlgebra& U = *b.D->U();
  const int d = b.D->base_dim();
  const int n = b.n;
  std::vector<Matrix> q(sz(d), Matrix(sz(n), sz(n)));
  DoubleRepresentation rho{b.D, n, {}, {}};
  for (int a = 0; a < d; ++a) {
    Matrix m(sz(n), sz(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m(sz(i), sz(j)) = b.f_at(i, j)[sz(a)];
        q[sz(a)](sz(j), sz(i)) = b.R_at(i, j)[sz(a)];
      }
    rho.rhoF.push_back(std::move(m));
  }
  // e^B = sum_A S~(B, A) S~^{-1}(e^A)
  const Matrix& s = U.data().antipode;
  for (int x = 0; x < d; ++x) {
    Matrix m(sz(n), sz(n));
    for (int a = 0; a < d; ++a)
      if (!s(sz(x), sz(a)).is_zero()) m += s(sz(x), sz(a)) * q[sz(a)];
    rho.rhoU.push_back(std::move(m));
  }
  Report out = verify_double_rep(rho);
  if (!out.passed()) throw VerificationFailure(out);
  return rho;
}

Matrix lambda_from_rep(const DoubleRepresentation& rho) {
  const HopfAlgebra& F = *rho.D->F();
  const int n = rho.n;
  Matrix lam(sz(n * n), sz(n * n));
  for (int a = 0; a < F.dim(); ++a) {
    Matrix sa = rho.of_F(F.antipode(F.basis(a)));
    const Matrix& xa = rho.rhoU[sz(a)];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) lam(sz(i * n + j), sz(k * n + l)) += sa(sz(j), sz(l)) * xa(sz(i), sz(k));
  }
  return lam;
}

Matrix lambda_matrix(const BicovariantBimodule& b) {
  const int n = b.n;
  Matrix lam(sz(n * n), sz(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) lam(sz(i * n + j), sz(k * n + l)) = dot(b.f_at(j, l), b.R_at(k, i));
  Matrix other = lambda_from_rep(bimodule_to_rep(b));
  if (other != lam) throw Error("Lambda from the pairing and from R^{-1} differ at " + first_difference(lam, other));
  return lam;
}

bool check_qybe(const Matrix& lambda, int n) {
  if (lambda.rows() != sz(n * n) || lambda.cols() != sz(n * n)) throw DimensionMismatch("Lambda is not n^2 x n^2");
  Matrix id = Matrix::identity(sz(n));
  Matrix l12 = kron(lambda, id);
  Matrix l23 = kron(id, lambda);
  // swap of the last two tensor legs
  Matrix p23(sz(n * n * n), sz(n * n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) p23(sz((a * n + b) * n + c), sz((a * n + c) * n + b)) = 1;
  Matrix l13 = p23 * l12 * p23;
  return l12 * l13 * l23 == l23 * l13 * l12;
}

GammaElement gamma_zero(const BicovariantBimodule& b) {
  return {std::vector<Vec>(sz(b.n), Vec(sz(b.D->base_dim())))};
}

GammaElement gamma_basis(const BicovariantBimodule& b, int i, const Vec& a) {
  GammaElement g = gamma_zero(b);
  g.coords[sz(i)] = a;
  return g;
}

GammaElement left_multiply(const BicovariantBimodule& b, const Vec& a, const GammaElement& x) {
  GammaElement g = gamma_zero(b);
  for (int i = 0; i < b.n; ++i) g.coords[sz(i)] = b.D->F()->multiply(a, x.coords[sz(i)]);
  return g;
}

GammaElement right_multiply(const BicovariantBimodule& b, const GammaElement& x, const Vec& a) {
  const HopfAlgebra& F = *b.D->F();
  GammaElement g = gamma_zero(b);
  for (int i = 0; i < b.n; ++i) {
    if (is_zero(x.coords[sz(i)])) continue;
    for (int j = 0; j < b.n; ++j) g.coords[sz(j)] += F.multiply(x.coords[sz(i)], star_l(b, b.f_at(i, j), a));
  }
  return g;
}

GammaElement module_right_action(int i, const Vec& a, const BicovariantBimodule& b) {
  return right_multiply(b, gamma_basis(b, i, b.D->F()->one()), a);
}

LeftCoaction left_coaction(const BicovariantBimodule& b, const GammaElement& x) {
  const HopfAlgebra& F = *b.D->F();
  LeftCoaction t;
  for (int i = 0; i < b.n; ++i)
    for (const auto& [k, v] : F.coproduct(x.coords[sz(i)])) add_key(t, {k.first, k.second, i}, v);
  return t;
}

RightCoaction right_coaction(const BicovariantBimodule& b, const GammaElement& x) {
  const HopfAlgebra& F = *b.D->F();
  RightCoaction t;
  for (int i = 0; i < b.n; ++i)
    for (const auto& [k, v] : F.coproduct(x.coords[sz(i)]))
      for (int j = 0; j < b.n; ++j) {
        Vec r = F.multiply(F.basis(k.second), b.R_at(j, i));
        for (int c = 0; c < F.dim(); ++c) add_key(t, {k.first, j, c}, v * r[sz(c)]);
      }
  return t;
}

Report verify_bicovariance(const BicovariantBimodule& b) {
  const HopfAlgebra& F = *b.D->F();
  const int d = F.dim();
  Report rep;

  std::string w_module, w_left, w_right, w_commute;
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < b.n; ++i) {
      GammaElement x = gamma_basis(b, i, F.basis(a));
      std::string here = F.label(a) + ",i=" + std::to_string(i);
      for (int p = 0; p < d && w_module.empty(); ++p)
        for (int q = 0; q < d && w_module.empty(); ++q)
          if (right_multiply(b, right_multiply(b, x, F.basis(p)), F.basis(q)) !=
              right_multiply(b, x, F.multiply(F.basis(p), F.basis(q))))
            w_module = here + "," + F.label(p) + "," + F.label(q);

      for (int p = 0; p < d; ++p) {
        Tensor2 dp = F.coproduct(F.basis(p));
        GammaElement xp = right_multiply(b, x, F.basis(p));
        // left coaction: delta(x p) = delta(x) Delta(p)
        if (w_left.empty()) {
          LeftCoaction expect;
          for (const auto& [key, v] : left_coaction(b, x))
            for (const auto& [k, c] : dp) {
              Vec l = F.multiply(F.basis(key[0]), F.basis(k.first));
              GammaElement r = right_multiply(b, gamma_basis(b, key[2], F.basis(key[1])), F.basis(k.second));
              for (int s = 0; s < d; ++s)
                if (!l[sz(s)].is_zero())
                  for (int j = 0; j < b.n; ++j)
                    for (int t = 0; t < d; ++t) add_key(expect, {s, t, j}, v * c * l[sz(s)] * r.coords[sz(j)][sz(t)]);
            }
          if (expect != left_coaction(b, xp)) w_left = here + "," + F.label(p);
        }
        if (w_right.empty()) {
          RightCoaction expect;
          for (const auto& [key, v] : right_coaction(b, x))
            for (const auto& [k, c] : dp) {
              GammaElement l = right_multiply(b, gamma_basis(b, key[1], F.basis(key[0])), F.basis(k.first));
              Vec r = F.multiply(F.basis(key[2]), F.basis(k.second));
              for (int j = 0; j < b.n; ++j)
                for (int s = 0; s < d; ++s)
                  if (!l.coords[sz(j)][sz(s)].is_zero())
                    for (int t = 0; t < d; ++t) add_key(expect, {s, j, t}, v * c * l.coords[sz(j)][sz(s)] * r[sz(t)]);
            }
          if (expect != right_coaction(b, xp)) w_right = here + "," + F.label(p);
        }
      }

      if (w_commute.empty()) {
        Tensor4 lhs, rhs;
        for (const auto& [key, v] : left_coaction(b, x))
          for (const auto& [k2, v2] : right_coaction(b, gamma_basis(b, key[2], F.basis(key[1]))))
            add_key(lhs, Key4{key[0], k2[0], k2[1], k2[2]}, v * v2);
        for (const auto& [key, v] : right_coaction(b, x))
          for (const auto& [k2, v2] : left_coaction(b, gamma_basis(b, key[1], F.basis(key[0]))))
            add_key(rhs, Key4{k2[0], k2[1], k2[2], key[2]}, v * v2);
        if (lhs != rhs) w_commute = here;
      }
    }
  rep.add("right_module", w_module.empty(), w_module);
  rep.add("left_coaction_bimodule_map", w_left.empty(), w_left);
  rep.add("right_coaction_bimodule_map", w_right.empty(), w_right);
  rep.add("coactions_commute", w_commute.empty(), w_commute);
  return rep;
}

}  // namespace hopfdouble
