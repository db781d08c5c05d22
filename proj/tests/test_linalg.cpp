#include <random>

#include "bialg/error.hpp"
#include "bialg/linalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bialg;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(6, -4);
  CHECK(a.small_num() == -3);
  CHECK(a.small_den() == 2);
  CHECK(a + (-a) == Rational(0));
  CHECK(a * (Rational(1) / a) == Rational(1));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);

  // Overflowing the int64 fast path promotes to GMP and demotes back.
  Rational big(std::int64_t{1} << 62);
  Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK(sq / big == big);
  CHECK((sq / big).is_small());
  CHECK(Rational::parse("123456789012345678901234567890/3").to_string() ==
        "41152263004115226300411522630");
}

TEST_CASE("prime fields") {
  Field f7 = Field::parse("F7");
  CHECK(f7.characteristic() == 7);
  CHECK(f7.reduce(Rational(8)) == Rational(1));
  CHECK(f7.reduce(Rational(-1)) == Rational(6));
  CHECK(f7.reduce(Rational(1, 3)) == Rational(5));
  for (int a = 1; a < 7; ++a) CHECK(f7.mul(Rational(a), f7.inv(Rational(a))) == Rational(1));
  CHECK_THROWS_AS(Field::prime(9), PreconditionError);
  CHECK_THROWS_AS(f7.inv(Rational(0)), PreconditionError);
  CHECK(Field::parse("Fp", 5) == Field::prime(5));
  CHECK_THROWS_AS(Scalar(f7, 1) + Scalar(Field::rationals(), 1), FieldMismatch);
}

TEST_CASE("mat_mul") {
  Field q;
  CHECK(mat_mul(Matrix::identity(q, 2), Matrix::identity(q, 2)) == Matrix::identity(q, 2));
  auto a = Matrix::from_rows(q, {{1, 1}, {0, 1}});
  auto b = Matrix::from_rows(q, {{1, 0}, {1, 1}});
  CHECK(mat_mul(a, b) == Matrix::from_rows(q, {{2, 1}, {1, 1}}));
  CHECK_THROWS_AS(mat_mul(a, Matrix::identity(q, 3)), DimensionMismatch);
  CHECK_THROWS_AS(mat_mul(a, Matrix::identity(Field::prime(5), 2)), FieldMismatch);

  std::mt19937_64 rng(1);
  Field f5 = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    auto x = oracle::random_matrix(f5, 4, 4, rng, 0, 4);
    auto y = oracle::random_matrix(f5, 4, 4, rng, 0, 4);
    CHECK(oracle::dense_of(mat_mul(x, y)) ==
          oracle::schoolbook(oracle::dense_of(x), oracle::dense_of(y), 5));
  }
  for (int t = 0; t < 10; ++t) {
    auto x = oracle::random_matrix(q, 3, 4, rng);
    auto y = oracle::random_matrix(q, 4, 2, rng);
    auto z = oracle::random_matrix(q, 2, 5, rng);
    CHECK(mat_mul(mat_mul(x, y), z) == mat_mul(x, mat_mul(y, z)));
  }
}

TEST_CASE("kron") {
  Field q;
  CHECK(kron(Matrix::identity(q, 2), Matrix::identity(q, 2)) == Matrix::identity(q, 4));
  auto swap = Matrix::from_rows(q, {{0, 1}, {1, 0}});
  CHECK(kron(swap, Matrix::identity(q, 2)) ==
        Matrix::from_rows(q, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));

  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    auto a = oracle::random_matrix(q, 2, 2, rng);
    auto b = oracle::random_matrix(q, 3, 3, rng);
    auto x = oracle::random_matrix(q, 2, 1, rng);
    auto y = oracle::random_matrix(q, 3, 1, rng);
    // (a (x) b)(x (x) y) = (ax) (x) (by), with x (x) y computed entrywise.
    Matrix xy(q, 6, 1);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 3; ++k) xy.set(i * 3 + k, 0, x.entry(i, 0) * y.entry(k, 0));
    auto lhs = oracle::dense_of(mat_mul(kron(a, b), xy));
    auto ax = oracle::schoolbook(oracle::dense_of(a), oracle::dense_of(x), 0);
    auto by = oracle::schoolbook(oracle::dense_of(b), oracle::dense_of(y), 0);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 3; ++k) CHECK(lhs[i * 3 + k][0] == ax[i][0] * by[k][0]);

    auto c = oracle::random_matrix(q, 2, 3, rng);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("kernel_basis") {
  Field q;
  auto k = kernel_basis(Matrix::from_rows(q, {{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k == Matrix::from_rows(q, {{-1}, {1}}));
  CHECK(kernel_basis(Matrix::identity(q, 3)).cols() == 0);

  std::mt19937_64 rng(3);
  for (Field f : {Field::rationals(), Field::prime(3), Field::prime(7)}) {
    for (int t = 0; t < 20; ++t) {
      // A random rank <= 2 matrix of shape 3x4.
      auto a = mat_mul(oracle::random_matrix(f, 3, 2, rng), oracle::random_matrix(f, 2, 4, rng));
      auto kb = kernel_basis(a);
      std::size_t r = oracle::rank(oracle::dense_of(a), f.characteristic());
      CHECK(rank(a) == r);
      CHECK(kb.cols() + r == 4);
      CHECK(mat_mul(a, kb) == Matrix(f, 3, kb.cols()));
      CHECK(oracle::rank(oracle::dense_of(kb), f.characteristic()) == kb.cols());
    }
  }
}

TEST_CASE("solve_right") {
  Field q;
  auto b = Matrix::from_rows(q, {{1, 2}, {3, 4}, {5, 6}});
  CHECK(*solve_right(Matrix::identity(q, 3), b) == b);
  CHECK_FALSE(solve_right(Matrix::from_rows(q, {{1}, {1}}), Matrix::from_rows(q, {{1}, {2}})));
  CHECK_THROWS_AS(solve_right(Matrix::identity(q, 2), b), DimensionMismatch);

  std::mt19937_64 rng(4);
  int injective = 0;
  for (int t = 0; t < 30; ++t) {
    auto a = oracle::random_matrix(q, 5, 3, rng);
    auto c = oracle::random_matrix(q, 3, 2, rng);
    auto rhs = mat_mul(a, c);
    auto x = solve_right(a, rhs);
    REQUIRE(x);
    CHECK(mat_mul(a, *x) == rhs);
    if (oracle::rank(oracle::dense_of(a), 0) == 3) {
      ++injective;
      CHECK(*x == c);
    }
  }
  CHECK(injective > 0);
}
