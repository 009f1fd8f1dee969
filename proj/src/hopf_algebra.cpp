#include "hopfdouble/hopf_algebra.hpp"

#include <map>
#include <sstream>

namespace hopfdouble {
namespace {

using SVec = std::map<int, Scalar>;

std::string idx(std::initializer_list<int> ids) {
  std::ostringstream os;
  const char* names[] = {"A", "B", "C"};
  int n = 0;
  for (int i : ids) {
    if (n) os << ",";
    os << names[n++] << "=" << i;
  }
  return os.str();
}

void prune(SVec& v) {
  std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
}

bool equal(SVec a, SVec b) {
  prune(a);
  prune(b);
  return a == b;
}

SVec basis_product(const HopfData& h, int a, int b) {
  SVec r;
  for (const auto& e : h.mult.slice(a, b)) r[e.k] += e.value;
  return r;
}

SVec times_right(const HopfData& h, const SVec& x, int c) {
  SVec r;
  for (const auto& [k, v] : x)
    for (const auto& e : h.mult.slice(k, c)) r[e.k] += v * e.value;
  return r;
}

SVec times_left(const HopfData& h, int a, const SVec& x) {
  SVec r;
  for (const auto& [k, v] : x)
    for (const auto& e : h.mult.slice(a, k)) r[e.k] += v * e.value;
  return r;
}

SVec to_svec(const Vec& v) {
  SVec r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[static_cast<int>(i)] = v[i];
  return r;
}

SVec multiply_sparse(const HopfData& h, const SVec& x, const SVec& y) {
  SVec r;
  for (const auto& [a, va] : x)
    for (const auto& [b, vb] : y)
      for (const auto& e : h.mult.slice(a, b)) r[e.k] += va * vb * e.value;
  return r;
}

Tensor2 coproduct_sparse(const HopfData& h, const SVec& x) {
  Tensor2 t;
  for (const auto& [a, va] : x)
    for (const auto& e : h.comult.slice(a)) add_to(t, e.j, e.k, va * e.value);
  prune(t);
  return t;
}

Tensor2 multiply_tensor(const HopfData& h, const Tensor2& x, const Tensor2& y) {
  Tensor2 r;
  for (const auto& [kx, vx] : x)
    for (const auto& [ky, vy] : y) {
      Scalar c = vx * vy;
      for (const auto& e1 : h.mult.slice(kx.first, ky.first))
        for (const auto& e2 : h.mult.slice(kx.second, ky.second))
          add_to(r, e1.k, e2.k, c * e1.value * e2.value);
    }
  prune(r);
  return r;
}

void check_shapes(const HopfData& h) {
  const int d = h.dim;
  auto sz = static_cast<std::size_t>(d);
  std::array<int, 3> cube{d, d, d};
  if (d <= 0) throw DimensionMismatch("Hopf algebra dimension must be positive");
  if (h.labels.size() != sz) throw DimensionMismatch("basis label count differs from dim");
  if (h.mult.dims() != cube) throw DimensionMismatch("multiplication tensor is not dim^3");
  if (h.comult.dims() != cube) throw DimensionMismatch("comultiplication tensor is not dim^3");
  if (h.counit.size() != sz) throw DimensionMismatch("counit length differs from dim");
  if (h.unit.size() != sz) throw DimensionMismatch("unit length differs from dim");
  if (h.antipode.rows() != sz || h.antipode.cols() != sz)
    throw DimensionMismatch("antipode is not dim x dim");
}

}  // namespace

Report verify_hopf_axioms(const HopfData& h) {
  check_shapes(h);
  const int d = h.dim;
  Report rep;
  const SVec one = to_svec(h.unit);

  // products of basis pairs, reused below
  std::vector<SVec> prod(static_cast<std::size_t>(d * d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) prod[static_cast<std::size_t>(a * d + b)] = basis_product(h, a, b);
  auto P = [&](int a, int b) -> const SVec& { return prod[static_cast<std::size_t>(a * d + b)]; };

  {
    std::string w;
    for (int a = 0; a < d && w.empty(); ++a)
      for (int b = 0; b < d && w.empty(); ++b)
        for (int c = 0; c < d && w.empty(); ++c)
          if (!equal(times_right(h, P(a, b), c), times_left(h, a, P(b, c)))) w = idx({a, b, c});
    rep.add("associativity", w.empty(), w);
  }
  {
    std::string w;
    for (int a = 0; a < d && w.empty(); ++a) {
      SVec ea{{a, Scalar(1)}};
      if (!equal(multiply_sparse(h, one, ea), ea) || !equal(multiply_sparse(h, ea, one), ea))
        w = idx({a});
    }
    rep.add("unit", w.empty(), w);
  }

  std::vector<Tensor2> cop(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) cop[static_cast<std::size_t>(a)] = coproduct_sparse(h, SVec{{a, Scalar(1)}});
  {
    std::string w;
    for (int a = 0; a < d && w.empty(); ++a) {
      Tensor3 left, right;
      for (const auto& [k, v] : cop[static_cast<std::size_t>(a)]) {
        for (const auto& e : h.comult.slice(k.first)) add_to(left, e.j, e.k, k.second, v * e.value);
        for (const auto& e : h.comult.slice(k.second)) add_to(right, k.first, e.j, e.k, v * e.value);
      }
      if (!tensor_equal(left, right)) w = idx({a});
    }
    rep.add("coassociativity", w.empty(), w);
  }
  {
    std::string w;
    for (int a = 0; a < d && w.empty(); ++a) {
      SVec l, r;
      for (const auto& [k, v] : cop[static_cast<std::size_t>(a)]) {
        l[k.second] += h.counit[static_cast<std::size_t>(k.first)] * v;
        r[k.first] += h.counit[static_cast<std::size_t>(k.second)] * v;
      }
      SVec ea{{a, Scalar(1)}};
      if (!equal(l, ea) || !equal(r, ea)) w = idx({a});
    }
    rep.add("counit", w.empty(), w);
  }
  {
    std::string w;
    for (int a = 0; a < d && w.empty(); ++a)
      for (int b = 0; b < d && w.empty(); ++b) {
        Tensor2 lhs = coproduct_sparse(h, P(a, b));
        Tensor2 rhs = multiply_tensor(h, cop[static_cast<std::size_t>(a)], cop[static_cast<std::size_t>(b)]);
        if (!tensor_equal(lhs, rhs)) w = idx({a, b});
      }
    rep.add("comultiplication_multiplicative", w.empty(), w);
  }
  {
    std::string w;
    auto eps = [&](const SVec& x) {
      Scalar s;
      for (const auto& [k, v] : x) s += h.counit[static_cast<std::size_t>(k)] * v;
      return s;
    };
    for (int a = 0; a < d && w.empty(); ++a)
      for (int b = 0; b < d && w.empty(); ++b)
        if (eps(P(a, b)) != h.counit[static_cast<std::size_t>(a)] * h.counit[static_cast<std::size_t>(b)])
          w = idx({a, b});
    if (w.empty() && !eps(one).is_one()) w = "unit";
    rep.add("counit_multiplicative", w.empty(), w);
  }
  {
    Tensor2 lhs = coproduct_sparse(h, one);
    Tensor2 rhs;
    for (const auto& [a, va] : one)
      for (const auto& [b, vb] : one) add_to(rhs, a, b, va * vb);
    bool ok = tensor_equal(lhs, rhs);
    rep.add("unit_comultiplication", ok, ok ? "" : "Delta(1)");
  }
  {
    std::string w;
    for (int a = 0; a < d && w.empty(); ++a) {
      SVec l, r;
      for (const auto& [k, v] : cop[static_cast<std::size_t>(a)]) {
        for (int s = 0; s < d; ++s) {
          const Scalar& s1 = h.antipode(static_cast<std::size_t>(k.first), static_cast<std::size_t>(s));
          if (!s1.is_zero())
            for (const auto& [c, vc] : P(s, k.second)) l[c] += v * s1 * vc;
          const Scalar& s2 = h.antipode(static_cast<std::size_t>(k.second), static_cast<std::size_t>(s));
          if (!s2.is_zero())
            for (const auto& [c, vc] : P(k.first, s)) r[c] += v * s2 * vc;
        }
      }
      SVec expect;
      for (const auto& [c, vc] : one) expect[c] = h.counit[static_cast<std::size_t>(a)] * vc;
      if (!equal(l, expect) || !equal(r, expect)) w = idx({a});
    }
    rep.add("antipode", w.empty(), w);
  }
  {
    bool ok = true;
    try {
      (void)h.antipode.inverse();
    } catch (const DivisionByZero&) {
      ok = false;
    }
    rep.add("antipode_invertible", ok, ok ? "" : "singular antipode matrix");
  }
  return rep;
}

AxiomFailure::AxiomFailure(Report report)
    : Error("Hopf algebra axiom '" + report.first_failure()->name + "' fails at " +
            report.first_failure()->witness),
      report_(std::move(report)) {}

HopfAlgebra::HopfAlgebra(HopfData data, Report report, std::shared_ptr<const HopfAlgebra> predual)
    : data_(std::move(data)), report_(std::move(report)), predual_(std::move(predual)) {
  antipode_inverse_ = data_.antipode.inverse();
}

std::shared_ptr<const HopfAlgebra> HopfAlgebra::create(HopfData data,
                                                       std::shared_ptr<const HopfAlgebra> predual) {
  Report rep = verify_hopf_axioms(data);
  if (!rep.passed()) throw AxiomFailure(std::move(rep));
  return std::shared_ptr<const HopfAlgebra>(new HopfAlgebra(std::move(data), std::move(rep), std::move(predual)));
}

Vec HopfAlgebra::multiply(const Vec& x, const Vec& y) const {
  const auto d = static_cast<std::size_t>(dim());
  if (x.size() != d || y.size() != d) throw DimensionMismatch("element length differs from algebra dim");
  Vec r(d);
  for (std::size_t a = 0; a < d; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (y[b].is_zero()) continue;
      Scalar c = x[a] * y[b];
      for (const auto& e : data_.mult.slice(static_cast<int>(a), static_cast<int>(b)))
        r[static_cast<std::size_t>(e.k)] += c * e.value;
    }
  }
  return r;
}

Tensor2 HopfAlgebra::coproduct(const Vec& x) const {
  if (x.size() != static_cast<std::size_t>(dim())) throw DimensionMismatch("element length differs from algebra dim");
  return coproduct_sparse(data_, to_svec(x));
}

Tensor3 HopfAlgebra::coproduct2(const Vec& x) const {
  Tensor3 t;
  for (const auto& [k, v] : coproduct(x))
    for (const auto& e : data_.comult.slice(k.second)) add_to(t, k.first, e.j, e.k, v * e.value);
  prune(t);
  return t;
}

Vec HopfAlgebra::antipode(const Vec& x) const { return data_.antipode.transpose().apply(x); }

Vec HopfAlgebra::antipode_inv(const Vec& x) const { return antipode_inverse_.transpose().apply(x); }

Tensor2 HopfAlgebra::multiply(const Tensor2& x, const Tensor2& y) const {
  return multiply_tensor(data_, x, y);
}

bool HopfAlgebra::is_commutative() const {
  for (int a = 0; a < dim(); ++a)
    for (int b = a + 1; b < dim(); ++b)
      if (!equal(basis_product(data_, a, b), basis_product(data_, b, a))) return false;
  return true;
}

bool HopfAlgebra::is_cocommutative() const {
  for (int a = 0; a < dim(); ++a) {
    Tensor2 t = coproduct(basis(a));
    if (!tensor_equal(t, flip(t))) return false;
  }
  return true;
}

namespace {

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.parent || a.parent != b.parent) throw ParentMismatch("elements belong to different algebras");
}

void require_dual(const AlgebraElement& f, const AlgebraElement& a) {
  if (!f.parent || !a.parent || f.parent->predual() != a.parent)
    throw ParentMismatch("functional is not in the dual of the element's algebra");
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  return {a.parent, a.coords + b.coords};
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  return {a.parent, a.coords - b.coords};
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b);
  return {a.parent, a.parent->multiply(a.coords, b.coords)};
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) { return {a.parent, s * a.coords}; }

HopfPtr dual_hopf(const HopfPtr& f) {
  const HopfData& h = f->data();
  const int d = h.dim;
  HopfData u;
  u.dim = d;
  for (const auto& l : h.labels) u.labels.push_back(l + "*");
  std::vector<TensorEntry> m, c;
  // e^A e^B = Delta_C^{AB} e^C
  for (const auto& e : h.comult.entries()) m.push_back({e.j, e.k, e.i, e.value});
  // Delta~(e^A) = m_{CB}^A e^B (x) e^C
  for (const auto& e : h.mult.entries()) c.push_back({e.k, e.j, e.i, e.value});
  u.mult = SparseTensor3({d, d, d}, std::move(m));
  u.comult = SparseTensor3({d, d, d}, std::move(c));
  u.unit = h.counit;
  u.counit = h.unit;
  u.antipode = f->antipode_inverse().transpose();
  return HopfAlgebra::create(std::move(u), f);
}

Scalar pair(const AlgebraElement& f, const AlgebraElement& a) {
  require_dual(f, a);
  return dot(f.coords, a.coords);
}

AlgebraElement star_left(const AlgebraElement& f, const AlgebraElement& a) {
  require_dual(f, a);
  Vec r(a.coords.size());
  for (const auto& [k, v] : a.parent->coproduct(a.coords))
    r[static_cast<std::size_t>(k.first)] += v * f.coords[static_cast<std::size_t>(k.second)];
  return {a.parent, r};
}

AlgebraElement star_right(const AlgebraElement& a, const AlgebraElement& f) {
  require_dual(f, a);
  Vec r(a.coords.size());
  for (const auto& [k, v] : a.parent->coproduct(a.coords))
    r[static_cast<std::size_t>(k.second)] += v * f.coords[static_cast<std::size_t>(k.first)];
  return {a.parent, r};
}

Tensor2 plain_coproduct(const HopfAlgebra& u, const Vec& x) { return flip(u.coproduct(x)); }

Vec plain_antipode(const HopfAlgebra& u, const Vec& x) { return u.antipode_inv(x); }

AlgebraElement adjoint_action(const AlgebraElement& x, const AlgebraElement& y) {
  require_same(x, y);
  const HopfAlgebra& u = *x.parent;
  const auto d = static_cast<std::size_t>(u.dim());
  Vec r(d);
  for (const auto& [k, v] : plain_coproduct(u, x.coords)) {
    Vec s = plain_antipode(u, u.basis(k.first));
    Vec t = u.multiply(u.multiply(s, y.coords), u.basis(k.second));
    axpy(v, t, r);
  }
  return {x.parent, r};
}

Tensor2 ad_star(const AlgebraElement& a) {
  const HopfAlgebra& f = *a.parent;
  Tensor2 r;
  for (const auto& [k, v] : f.coproduct2(a.coords)) {
    Vec s = f.multiply(f.antipode(f.basis(k[0])), f.basis(k[2]));
    for (std::size_t c = 0; c < s.size(); ++c)
      if (!s[c].is_zero()) add_to(r, k[1], static_cast<int>(c), v * s[c]);
  }
  prune(r);
  return r;
}

Vec big_ad(const HopfAlgebra& f, const Vec& x, const Vec& a) {
  Vec r(static_cast<std::size_t>(f.dim()));
  for (const auto& [k, v] : f.coproduct2(a)) {
    Scalar p = dot(x, f.multiply(f.antipode(f.basis(k[0])), f.basis(k[2])));
    if (!p.is_zero()) r[static_cast<std::size_t>(k[1])] += v * p;
  }
  return r;
}

AlgebraElement big_ad(const AlgebraElement& x, const AlgebraElement& a) {
  require_dual(x, a);
  return {a.parent, big_ad(*a.parent, x.coords, a.coords)};
}

}  // namespace hopfdouble
