#include <doctest.h>

#include "support.hpp"

using namespace hwc;
using namespace hwc::testing;

TEST_CASE("truncated projectives of K[x,y]/(x^3,y^3)") {
  Workspace W = workspace("trunc:x:-1:3,y:1:3");
  Truncation T(W, 2);
  REQUIRE(T.labels.size() == 3);
  // Q_2(s) = K[x,y]/(x^3, y^{3-s}) shifted by s
  for (int v = 0; v < 3; ++v) CHECK(T.Q[v].dim() == 3 * (3 - T.labels[v].s));
  CHECK(check_basic(T.C).ok);
  CHECK(validate_algebra(*T.C.alg).ok());
}

TEST_CASE("Ext from projectives vanishes") {
  Workspace W = workspace("trunc:x:-1:3,y:1:3");
  Truncation T(W, 2);
  for (int v = 0; v < 3; ++v)
    for (int u = 0; u < 3; ++u) {
      auto e = ext_dims(T.C, basic_projective(T.C, v), T.simple(u), 2);
      CHECK(e[0] == (u == v ? 1 : 0));
      CHECK(e[1] == 0);
      CHECK(e[2] == 0);
    }
}

TEST_CASE("projective dimension of standard modules is bounded by d - deg") {
  for (std::string fam : {"trunc:x:-1:2,y:1:2", "trunc:x:-1:3,y:1:3"}) {
    Workspace W = workspace(fam);
    for (int d = W.N(); d <= 3; ++d) {
      Truncation T(W, d);
      for (int v = 0; v < T.C.nvert(); ++v) {
        int bound = d - T.labels[v].s;
        int pd = projective_dimension(T.C, T.image(W.standard(T.labels[v])), bound + 1);
        CHECK(pd >= 0);
        CHECK(pd <= bound);
      }
    }
  }
}

TEST_CASE("simple resolution of C_1") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  Truncation T(W, 1);
  int big = T.Q[0].dim() > T.Q[1].dim() ? 0 : 1;
  Resolution R = minimal_resolution(T.C, T.simple(1), 4);
  CHECK(R.complete);
  CHECK(R.length() == 2);
  CHECK(big == 0);
}

TEST_CASE("Hom and Ext into truncated projectives of C_1") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  Truncation T(W, 1);
  REQUIRE(projective_dim(T, 0) == 3);
  // P0 = L0/L1/L0, P1 = L1/L0; only L1 is killed by F
  const int want[2][2][3] = {{{1, 0, 0}, {1, 1, 0}}, {{0, 0, 0}, {0, 0, 1}}};
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      auto e = ext_dims(T.C, T.simple(j), basic_projective(T.C, k), 2);
      for (int i = 0; i < 3; ++i) CHECK(e[i] == want[j][k][i]);
    }
}

TEST_CASE("image of A<l> is projective in C_d") {
  Workspace W = workspace("trunc:x:-1:3,y:1:3");
  Truncation T(W, 3);
  Module I = T.image(shifted_sum(W, 1));
  for (int v = 0; v < T.C.nvert(); ++v) CHECK(ext_dims(T.C, I, T.simple(v), 1)[1] == 0);
}

TEST_CASE("B_l dimensions") {
  Workspace W = workspace("trunc:x:-1:3,y:1:3");
  for (int ell = 0; ell <= 2; ++ell) {
    auto B = bell_algebra(W, ell);
    CHECK(B.alg->dim() == bell_dim_formula(W, ell));
    CHECK(bell_end_dim(W, ell) == B.alg->dim());
  }
  CHECK(bell_zero_check(W).ok);
  CHECK_THROWS_AS(bell_algebra(W, -1), PreconditionError);
}

TEST_CASE("F kills exactly the simples outside [0, l]") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  for (int d = 1; d <= 3; ++d) {
    Truncation T(W, d);
    auto f = faithfulness_report(T);
    CHECK(f.killed.size() == 1);
    CHECK(f.minus_one_faithful);
    CHECK(f.cover);
    auto B = bell_algebra(W, d - 1);
    CHECK(double_centralizer_check(T, B).ok);
  }
}

TEST_CASE("quiver of C_1 and the truncated path algebra dimension") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  Truncation T(W, 1);
  auto Q = quiver_presentation(T.C);
  CHECK(Q.arrows.size() == 2);
  REQUIRE(Q.relations.size() == 1);
  CHECK(Q.quotient_dim == 5);
  CHECK(relation_str(Q, Q.relations[0]) == "a1*a0 = 0");
  // wrong golden relation is rejected
  auto m = match_quiver(T.C, Q, {1, 0}, {{0, 1, "a"}, {1, 0, "b"}}, {{{1, {"b", "a"}}}});
  CHECK_FALSE(m.ok);
}

TEST_CASE("socle support bound on one-sided algebras") {
  std::mt19937_64 rng(4);
  auto B = build_family("trunc:x:-1:3", Field::rationals());
  CHECK(socle_support_test(B.A, 2, 30, rng).ok);
  auto C = build_family("trunc:y:1:2,z:1:2", Field::rationals());
  CHECK(socle_support_test(C.A, 2, 30, rng).ok);
}

TEST_CASE("truncation rejects negative bounds") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  CHECK_THROWS_AS(Truncation(W, -1), PreconditionError);
}
