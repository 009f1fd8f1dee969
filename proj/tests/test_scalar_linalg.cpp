#include <random>

#include <doctest.h>

#include "hopfdouble/linalg.hpp"

using namespace hopfdouble;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  return Rational(num(rng), den(rng));
}

// Textbook Gauss-Jordan over the rationals, used as the rank oracle.
std::size_t naive_rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

Matrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
  Matrix a(rows, rank), b(rank, cols);
  std::uniform_int_distribution<long> small(-3, 3);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rank; ++k) a(i, k) = Rational(small(rng));
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = random_rational(rng);
  return a * b;
}

}  // namespace

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK(field_op(FieldOp::add, Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
  CHECK(field_op(FieldOp::inv, Rational(-2, 3)) == Rational(-3, 2));
}

TEST_CASE("nullspace of random low-rank matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::size_t rows = 3 + rng() % 6, cols = 3 + rng() % 7, r = 1 + rng() % std::min(rows, cols);
    Matrix m = random_low_rank(rng, rows, cols, r);
    std::vector<Vec> ker = nullspace(m);
    std::size_t oracle = naive_rank(m);
    CHECK(rank(m) == oracle);
    CHECK(ker.size() + oracle == cols);
    for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
    CHECK(rank(ker) == ker.size());
  }
}

TEST_CASE("row echelon membership and coordinates") {
  RowEchelon e(3);
  CHECK(e.insert(Vec{1, 2, 3}));
  CHECK(e.insert(Vec{0, 1, 1}));
  CHECK_FALSE(e.insert(Vec{2, 5, 7}));
  CHECK(e.contains(Vec{1, 3, 4}));
  CHECK_FALSE(e.contains(Vec{0, 0, 1}));
  CHECK(e.rank() == 2);
  auto c = coordinates_in({Vec{1, 2, 3}, Vec{0, 1, 1}}, Vec{2, 7, 9});
  REQUIRE(c.has_value());
  CHECK(*c == Vec{2, 3});
  CHECK_FALSE(coordinates_in({Vec{1, 0, 0}}, Vec{0, 1, 0}).has_value());
  CHECK(normalize_last_positive(Vec{Rational(1, 2), Rational(-1, 3)}) == Vec{-3, 2});
  CHECK(independent_subset({Vec{1, 0}, Vec{2, 0}, Vec{0, 1}}) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("matrix inverse and kronecker product") {
  Matrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  CHECK(m * m.inverse() == Matrix::identity(2));
  CHECK_THROWS_AS(Matrix(2, 2).inverse(), DivisionByZero);
  Matrix k = kron(m, Matrix::identity(2));
  CHECK(k(2, 0) == Rational(1));
  CHECK(k(0, 2) == Rational(1));
  CHECK(k(1, 3) == Rational(1));
}
