#include <doctest.h>

#include "hwc/builders.hpp"

using namespace hwc;

TEST_CASE("truncated polynomial builders") {
  Field Q = Field::rationals();
  auto a = build_family("trunc:x:-1:2,y:1:2", Q);
  CHECK(a.A->dim() == 4);
  CHECK(validate_algebra(*a.A).ok());
  for (const auto& c : validate_triangular(*a.A, a.tri)) CHECK_MESSAGE(c.ok, c.name);
  auto b = build_family("trunc:x:-1:3,y:1:3", Q);
  CHECK(b.A->dim() == 9);
  Triangular T = Triangular::build(b.A, b.tri);
  CHECK(T.N() == 2);
  CHECK(check_ambidextrous(T));
  CHECK(check_well_generated(T));
  auto c = build_family("trunc:x:-1:2,y:1:2,z:1:2", Q);
  CHECK(c.A->dim() == 8);
  std::mt19937_64 rng(0);
  CHECK_FALSE(find_graded_symmetric_form(*c.A, rng));
  CHECK(find_graded_symmetric_form(*a.A, rng));
}

TEST_CASE("restricted sl2") {
  auto B = restricted_sl2(3);
  CHECK(B.A->dim() == 27);
  CHECK(B.A->of_degree(0).size() == 9);
  CHECK(validate_algebra(*B.A).ok());
  for (const auto& c : validate_triangular(*B.A, B.tri)) CHECK_MESSAGE(c.ok, c.name);
  CHECK(is_central(*B.A, B.named.at("Omega")));
  for (const auto& c : check_anti_involution(*B.A, *B.tau, &B.tri)) CHECK_MESSAGE(c.ok, c.name);
  CHECK_THROWS_AS(restricted_sl2(2), PreconditionError);
  CHECK_THROWS_AS(restricted_sl2(9), PreconditionError);
  CHECK_THROWS_AS(restricted_sl2(11), PreconditionError);
  CHECK(restricted_sl2(5).A->dim() == 125);
}

TEST_CASE("non-central elements are detected") {
  auto B = restricted_sl2(3);
  int e = -1;
  for (int k = 0; k < B.A->dim(); ++k)
    if (B.A->label(k) == "E") e = k;
  REQUIRE(e >= 0);
  CHECK_FALSE(is_central(*B.A, B.A->basis_vec(e)));
}

TEST_CASE("opposite algebra reverses products and negates degrees") {
  auto B = restricted_sl2(3);
  auto op = B.A->opposite();
  CHECK(validate_algebra(*op).ok());
  for (int i = 0; i < B.A->dim(); i += 5)
    for (int j = 0; j < B.A->dim(); j += 7) CHECK(op->mul_basis(i, j) == B.A->mul_basis(j, i));
  for (int k = 0; k < B.A->dim(); ++k) CHECK(op->deg[k] == -B.A->deg[k]);
}

TEST_CASE("validator catches a broken triangular decomposition") {
  Field Q = Field::rationals();
  auto a = build_family("trunc:x:-1:2,y:1:2", Q);
  TriangularData bad{a.tri.aplus, a.tri.tpart, a.tri.aminus};
  bool all = true;
  for (const auto& c : validate_triangular(*a.A, bad)) all = all && c.ok;
  CHECK_FALSE(all);
}

TEST_CASE("validator catches bad structure constants") {
  Field Q = Field::rationals();
  auto a = build_family("trunc:x:-1:2,y:1:2", Q);
  auto A = std::make_shared<Algebra>(*a.A);
  int one = -1, x = -1, y = -1;
  for (int k = 0; k < A->dim(); ++k) {
    if (A->label(k) == "1") one = k;
    if (A->label(k) == "x") x = k;
    if (A->label(k) == "y") y = k;
  }
  REQUIRE(one >= 0);
  auto B = std::make_shared<Algebra>(*A);
  A->set_prod(x, y, {{one, Q.one()}});  // (xy)x = x but x(yx) = 0
  auto r = validate_algebra(*A);
  CHECK_FALSE(r.associative);
  B->set_prod(x, x, {{y, Q.one()}});
  CHECK_FALSE(validate_algebra(*B).graded);
}
