#include <doctest.h>

#include "support.hpp"

using namespace hwc;
using namespace hwc::testing;

TEST_CASE("standard datum of K[x,y]/(x^2,y^2)") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  auto P = datum_poset(W);
  REQUIRE(P.size() == 2);
  StandardDatum S = standard_datum(W);
  CHECK(S.size() == 2);
  for (const auto& L : S.layers) {
    CHECK(L.nF == 1);
    CHECK(L.nG == 1);
  }
  CHECK(verify_standard_datum(W, S).ok);
}

TEST_CASE("cell datum with the swap anti-involution on K[x,y]/(x^3,y^3)") {
  auto B = build_family("trunc:x:-1:3,y:1:3", Field::rationals());
  REQUIRE(B.tau);
  Workspace W(B.A, B.tri, 0);
  auto cd = cell_datum(W, *B.tau);
  CHECK_MESSAGE(cd.ok, cd.error);
  CHECK(cd.datum.size() == 3);
  CHECK(verify_standard_datum(W, cd.datum).ok);
  for (const auto& c : cell_modules(W, cd.datum))
    if (c.underlined) {
      CHECK(c.head_iso);
      CHECK(c.rank == c.tilting_mult);
    }
}

TEST_CASE("datum poset of the x,y,z example comes from Hom spaces") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2,z:1:2");
  auto P = datum_poset(W);
  REQUIRE(P.size() == 2);
  CHECK(P[0].s == 1);
  CHECK(P[1].s == 2);
  CHECK(standard_datum(W).size() == 3);
}

TEST_CASE("random lifts give the same filtration") {
  Workspace W = workspace("sl2:3", Field::prime(3));
  StandardDatum a = standard_datum(W, {true, 1}), b = standard_datum(W, {true, 2});
  CHECK(a.size() == 9);
  CHECK(verify_standard_datum(W, a).ok);
  CHECK(verify_standard_datum(W, b).ok);
  CHECK(same_filtration(a, b));
}

TEST_CASE("decomposition matrices of restricted sl2, p = 3") {
  Workspace W = workspace("sl2:3", Field::prime(3));
  auto M = matrices(W);
  std::vector<std::vector<long long>> D{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
  CHECK(M.D == D);
  CHECK(M.bgg);
  CHECK(M.factorization);
  CHECK(M.verdict == "NOT cellular");
  CHECK(semisimplicity(W).agree());
  CHECK_FALSE(quasi_hereditary_core(W).quasi_hereditary);
}

TEST_CASE("matrix algebra is semisimple on both sides") {
  auto B = build_family("mat:2", Field::rationals());
  Workspace W(B.A, B.tri, 0);
  auto s = semisimplicity(W);
  CHECK(s.A0_semisimple);
  CHECK(s.A_semisimple);
  auto M = matrices(W);
  CHECK(M.D == std::vector<std::vector<long long>>{{1}});
}

TEST_CASE("core of K[x,y]/(x^2,y^2) has one simple and no obstruction") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  CHECK(W.A0->dim() == 2);
  CHECK(W.core_simples.size() == 1);
  auto M = matrices(W);
  CHECK(M.D == std::vector<std::vector<long long>>{{2}});
  CHECK(M.C == std::vector<std::vector<long long>>{{4}});
  CHECK(M.verdict == "no obstruction found");
  CHECK(opposite_multiplicity_check(W).ok);
}
