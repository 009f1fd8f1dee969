#include "hopfdouble/scalar.hpp"

#include <ostream>

namespace hopfdouble {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw ParseError("malformed rational '" + s + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw DivisionByZero();
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational field_op(FieldOp op, const Rational& x, const Rational& y) {
  switch (op) {
    case FieldOp::add: return x + y;
    case FieldOp::mul: return x * y;
    case FieldOp::inv: return x.inverse();
    case FieldOp::neg: return -x;
  }
  throw Error("unknown field operation");
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  r += b;
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& a) {
  Vec r(a.size());
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] = s * a[i];
  return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= b[i];
  return a;
}

void axpy(const Scalar& s, const Vec& x, Vec& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

}  // namespace hopfdouble
