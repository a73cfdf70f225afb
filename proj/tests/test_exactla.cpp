#include <doctest.h>

#include <random>

#include "hwc/matrix.hpp"
#include "hwc/subspace.hpp"

using namespace hwc;

namespace {

Matrix random_matrix(const Field& f, int r, int c, std::mt19937_64& rng, int range = 3) {
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = f.random(rng, range);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  Field Q = Field::rationals();
  Scalar a = Q.parse("1/3"), b = Q.parse("-2/6");
  CHECK((a + b).is_zero());
  CHECK((a * Q.from_int(3)).is_one());
  CHECK((a / a).is_one());
  CHECK(Q.parse("4/6") == Q.parse("2/3"));
  CHECK(Q.parse("-7/14").str() == "-1/2");
}

TEST_CASE("rationals fall back to GMP on overflow") {
  Field Q = Field::rationals();
  Scalar x = Q.from_int(1LL << 62);
  Scalar y = x * x * x;
  CHECK(y.to_mpq() == mpq_class(mpz_class(1) << 186));
  CHECK((y / x / x) == x);
  Scalar h = Q.parse("1/" + std::to_string(1LL << 62));
  CHECK((h * x).is_one());
}

TEST_CASE("prime field arithmetic") {
  Field F = Field::prime(7);
  CHECK((F.from_int(3) * F.from_int(5)) == F.one());
  CHECK(F.from_int(-1) == F.from_int(6));
  CHECK((F.from_int(3).inv() * F.from_int(3)).is_one());
  CHECK(F.parse("1/2") == F.from_int(4));
  CHECK_THROWS(F.zero().inv());
  CHECK_THROWS_AS(F.one() + Field::prime(5).one(), FieldMismatch);
}

TEST_CASE("rank plus nullity equals the number of columns") {
  std::mt19937_64 rng(11);
  for (Field f : {Field::rationals(), Field::prime(2), Field::prime(5)})
    for (int t = 0; t < 20; ++t) {
      int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
      Matrix m = random_matrix(f, r, c, rng);
      Matrix K = kernel_basis(m);
      CHECK(rank(m) + K.rows() == c);
      for (int i = 0; i < K.rows(); ++i) CHECK(is_zero(m * K.row(i)));
    }
}

TEST_CASE("subspace dimension formula") {
  std::mt19937_64 rng(5);
  Field Q = Field::rationals();
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec> a, b;
    for (int i = 0; i < 3; ++i) a.push_back(random_matrix(Q, 1, 5, rng, 2).row(0));
    for (int i = 0; i < 3; ++i) b.push_back(random_matrix(Q, 1, 5, rng, 2).row(0));
    Subspace U = Subspace::span(Q, 5, a), V = Subspace::span(Q, 5, b);
    CHECK((U + V).dim() + U.intersect(V).dim() == U.dim() + V.dim());
    CHECK((U + V).contains(U));
  }
}

TEST_CASE("solve, inverse and determinant") {
  Field Q = Field::rationals();
  Matrix m = Matrix::from_rows(Q, 2, {{Q.from_int(2), Q.from_int(1)}, {Q.from_int(1), Q.from_int(1)}});
  CHECK(determinant(m) == Q.one());
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((m * *inv) == Matrix::identity(Q, 2));
  auto x = solve(m, {Q.from_int(3), Q.from_int(2)});
  REQUIRE(x);
  CHECK((*x)[0] == Q.one());
  CHECK((*x)[1] == Q.one());
  Matrix s = Matrix::from_rows(Q, 2, {{Q.one(), Q.one()}, {Q.one(), Q.one()}});
  CHECK_FALSE(solve(s, {Q.one(), Q.zero()}));
  CHECK_FALSE(inverse(s));
}
