#include "hopfdouble/drinfeld_double.hpp"

#include <map>

namespace hopfdouble {
namespace {

using SVec = std::map<int, Scalar>;

SVec product(const HopfData& h, const SVec& x, const SVec& y) {
  SVec r;
  for (const auto& [a, va] : x)
    for (const auto& [b, vb] : y)
      for (const auto& e : h.mult.slice(a, b)) r[e.k] += va * vb * e.value;
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

SVec row_of(const Matrix& m, int i) {
  SVec r;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(static_cast<std::size_t>(i), j).is_zero()) r[static_cast<int>(j)] = m(static_cast<std::size_t>(i), j);
  return r;
}

std::string pair_witness(const DrinfeldDouble& d, int x) {
  auto [a, b] = d.split(x);
  return d.F()->label(a) + "|" + d.U()->label(b);
}

}  // namespace

std::shared_ptr<const DrinfeldDouble> DrinfeldDouble::build(const HopfPtr& f) {
  std::shared_ptr<DrinfeldDouble> out(new DrinfeldDouble());
  out->f_ = f;
  out->u_ = dual_hopf(f);
  const HopfData& F = f->data();
  const HopfData& U = out->u_->data();
  const int n = F.dim;
  const int N = n * n;
  auto at = [n](int a, int x) { return a * n + x; };

  // X a = sum a_(2) X_(2) <X, a_(3) e_C S^{-1}(a_(1))> e^C, i.e. the
  // coefficient of e_J (x) e^C in e^P e_Q is <e^P, e_K e_C S^{-1}(e_I)>
  // summed over the terms e_I (x) e_J (x) e_K of the iterated coproduct of e_Q.
  std::vector<std::map<int, Scalar>> table(static_cast<std::size_t>(N));
  for (int q = 0; q < n; ++q) {
    for (const auto& [k, c] : f->coproduct2(f->basis(q))) {
      SVec sinv = row_of(f->antipode_inverse(), k[0]);
      for (int col = 0; col < n; ++col) {
        SVec y = product(F, product(F, SVec{{k[2], Scalar(1)}}, SVec{{col, Scalar(1)}}), sinv);
        for (const auto& [p, v] : y) table[static_cast<std::size_t>(p * n + q)][at(k[1], col)] += c * v;
      }
    }
  }
  out->straighten_.resize(static_cast<std::size_t>(N));
  for (std::size_t i = 0; i < table.size(); ++i)
    for (const auto& [idx, v] : table[i])
      if (!v.is_zero()) out->straighten_[i].emplace_back(idx, v);

  HopfData D;
  D.dim = N;
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) D.labels.push_back(F.labels[static_cast<std::size_t>(a)] + "|" + U.labels[static_cast<std::size_t>(x)]);

  // (e_A (x) e^B)(e_C (x) e^E) = e_A (e^B e_C) e^E
  std::vector<TensorEntry> mult;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          std::map<int, Scalar> acc;
          for (const auto& [idx, v] : out->straighten_basis(b, c)) {
            int j = idx / n, k = idx % n;
            for (const auto& e1 : F.mult.slice(a, j))
              for (const auto& e2 : U.mult.slice(k, e)) acc[at(e1.k, e2.k)] += v * e1.value * e2.value;
          }
          for (const auto& [idx, v] : acc)
            if (!v.is_zero()) mult.push_back({at(a, b), at(c, e), idx, v});
        }
  D.mult = SparseTensor3({N, N, N}, std::move(mult));

  std::vector<TensorEntry> comult;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& e1 : F.comult.slice(a))
        for (const auto& e2 : U.comult.slice(b))
          comult.push_back({at(a, b), at(e1.j, e2.j), at(e1.k, e2.k), e1.value * e2.value});
  D.comult = SparseTensor3({N, N, N}, std::move(comult));

  D.counit.assign(static_cast<std::size_t>(N), Scalar());
  D.unit.assign(static_cast<std::size_t>(N), Scalar());
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      D.counit[static_cast<std::size_t>(at(a, x))] = F.counit[static_cast<std::size_t>(a)] * U.counit[static_cast<std::size_t>(x)];
      D.unit[static_cast<std::size_t>(at(a, x))] = F.unit[static_cast<std::size_t>(a)] * U.unit[static_cast<std::size_t>(x)];
    }

  // S(a X) = S(X) S(a)
  D.antipode = Matrix(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      Vec s = out->straighten(out->u_->antipode(out->u_->basis(x)), f->antipode(f->basis(a)));
      for (int j = 0; j < N; ++j) D.antipode(static_cast<std::size_t>(at(a, x)), static_cast<std::size_t>(j)) = s[static_cast<std::size_t>(j)];
    }

  out->d_ = HopfAlgebra::create(std::move(D));
  return out;
}

Vec DrinfeldDouble::tensor(const Vec& a, const Vec& x) const {
  const int n = base_dim();
  Vec r(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(index(i, j))] = a[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
  }
  return r;
}

Vec DrinfeldDouble::embed_F(const Vec& a) const { return tensor(a, u_->one()); }

Vec DrinfeldDouble::embed_U(const Vec& x) const { return tensor(f_->one(), x); }

Vec DrinfeldDouble::straighten(const Vec& x, const Vec& a) const {
  const int n = base_dim();
  if (x.size() != static_cast<std::size_t>(n) || a.size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("straighten: element length differs from dim F");
  Vec r(static_cast<std::size_t>(n * n));
  for (int p = 0; p < n; ++p) {
    if (x[static_cast<std::size_t>(p)].is_zero()) continue;
    for (int q = 0; q < n; ++q) {
      if (a[static_cast<std::size_t>(q)].is_zero()) continue;
      Scalar c = x[static_cast<std::size_t>(p)] * a[static_cast<std::size_t>(q)];
      for (const auto& [idx, v] : straighten_basis(p, q)) r[static_cast<std::size_t>(idx)] += c * v;
    }
  }
  return r;
}

CanonicalR canonical_r(const DrinfeldDouble& d) {
  const int n = d.base_dim();
  CanonicalR out;
  for (int a = 0; a < n; ++a) {
    Vec left = d.embed_F(d.F()->basis(a));
    Vec left_inv = d.embed_F(d.F()->antipode(d.F()->basis(a)));
    Vec right = d.embed_U(d.U()->basis(a));
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (right[j].is_zero()) continue;
        if (!left[i].is_zero()) add_to(out.r, static_cast<int>(i), static_cast<int>(j), left[i] * right[j]);
        if (!left_inv[i].is_zero())
          add_to(out.r_inv, static_cast<int>(i), static_cast<int>(j), left_inv[i] * right[j]);
      }
    ++out.terms;
  }
  prune(out.r);
  prune(out.r_inv);
  return out;
}

Report verify_quasitriangular(const DrinfeldDouble& d) {
  const HopfAlgebra& D = *d.hopf();
  CanonicalR R = canonical_r(d);
  Report rep;

  Tensor2 one_one;
  Vec one = D.one();
  for (std::size_t i = 0; i < one.size(); ++i)
    for (std::size_t j = 0; j < one.size(); ++j)
      if (!one[i].is_zero() && !one[j].is_zero()) add_to(one_one, static_cast<int>(i), static_cast<int>(j), one[i] * one[j]);
  bool inv_ok = tensor_equal(D.multiply(R.r, R.r_inv), one_one) && tensor_equal(D.multiply(R.r_inv, R.r), one_one);
  rep.add("r_inverse", inv_ok, inv_ok ? "" : "R R^-1 != 1 (x) 1");

  std::string w;
  for (int x = 0; x < D.dim() && w.empty(); ++x) {
    Tensor2 cop = D.coproduct(D.basis(x));
    if (!tensor_equal(D.multiply(flip(cop), R.r), D.multiply(R.r, cop))) w = pair_witness(d, x);
  }
  rep.add("quasitriangular", w.empty(), w);
  return rep;
}

Report verify_double_relations(const DrinfeldDouble& d) {
  const HopfAlgebra& D = *d.hopf();
  const HopfAlgebra& F = *d.F();
  const HopfAlgebra& U = *d.U();
  const int n = d.base_dim();
  Report rep;

  auto embedding_checks = [&](const char* name, const HopfAlgebra& h, auto embed) {
    std::string w;
    for (int a = 0; a < n && w.empty(); ++a)
      for (int b = 0; b < n && w.empty(); ++b)
        if (D.multiply(embed(h.basis(a)), embed(h.basis(b))) != embed(h.multiply(h.basis(a), h.basis(b))))
          w = h.label(a) + "," + h.label(b);
    if (w.empty() && embed(h.one()) != D.one()) w = "unit";
    for (int a = 0; a < n && w.empty(); ++a) {
      Tensor2 image;
      for (const auto& [k, v] : h.coproduct(h.basis(a))) {
        Vec l = embed(h.basis(k.first)), r = embed(h.basis(k.second));
        for (std::size_t i = 0; i < l.size(); ++i)
          for (std::size_t j = 0; j < r.size(); ++j)
            if (!l[i].is_zero() && !r[j].is_zero()) add_to(image, static_cast<int>(i), static_cast<int>(j), v * l[i] * r[j]);
      }
      if (!tensor_equal(image, D.coproduct(embed(h.basis(a))))) w = h.label(a);
      else if (D.counit(embed(h.basis(a))) != h.counit(h.basis(a))) w = h.label(a);
      else if (D.antipode(embed(h.basis(a))) != embed(h.antipode(h.basis(a)))) w = h.label(a);
    }
    rep.add(name, w.empty(), w);
  };
  embedding_checks("embed_F", F, [&](const Vec& v) { return d.embed_F(v); });
  embedding_checks("embed_U", U, [&](const Vec& v) { return d.embed_U(v); });

  // a X = sum X_(2) a_(2) <X, S^{-1}(a_(3)) e_C a_(1)> e^C, with the
  // coefficient <e^P, .> read off the product in F
  {
    std::string w;
    for (int a = 0; a < n && w.empty(); ++a) {
      std::vector<Vec> rhs(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n * n)));
      for (const auto& [k, c] : F.coproduct2(F.basis(a)))
        for (int col = 0; col < n; ++col) {
          Vec y = F.multiply(F.multiply(F.antipode_inv(F.basis(k[2])), F.basis(col)), F.basis(k[0]));
          Vec s = d.straighten(U.basis(col), F.basis(k[1]));
          for (int p = 0; p < n; ++p)
            if (!y[static_cast<std::size_t>(p)].is_zero()) axpy(c * y[static_cast<std::size_t>(p)], s, rhs[static_cast<std::size_t>(p)]);
        }
      for (int p = 0; p < n && w.empty(); ++p)
        if (rhs[static_cast<std::size_t>(p)] != D.basis(d.index(a, p))) w = pair_witness(d, d.index(a, p));
    }
    rep.add("cross_relation_aX", w.empty(), w);
  }

  // Delta_C^{AB} m_{BD}^E e_A e^D = Delta_C^{BA} m_{DB}^E e^D e_A for all C, E
  {
    std::string w;
    const HopfData& h = F.data();
    for (int c = 0; c < n && w.empty(); ++c)
      for (int e = 0; e < n && w.empty(); ++e) {
        Vec lhs(static_cast<std::size_t>(n * n)), rhs(static_cast<std::size_t>(n * n));
        for (const auto& t : h.comult.slice(c)) {
          for (int dd = 0; dd < n; ++dd) {
            Scalar m1 = h.mult.at(t.k, dd, e);
            if (!m1.is_zero()) lhs[static_cast<std::size_t>(d.index(t.j, dd))] += t.value * m1;
            Scalar m2 = h.mult.at(dd, t.j, e);
            if (!m2.is_zero()) axpy(t.value * m2, d.straighten(U.basis(dd), F.basis(t.k)), rhs);
          }
        }
        if (lhs != rhs) w = "C=" + std::to_string(c) + ",E=" + std::to_string(e);
      }
    rep.add("cross_relation_index_form", w.empty(), w);
  }
  return rep;
}

}  // namespace hopfdouble
